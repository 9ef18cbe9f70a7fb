#pragma once

#include <string>
#include <vector>

#include "srbm/classify.hpp"
#include "srbm/model.hpp"

namespace srbm {

// Reference models with known classification and, where available, known
// closed forms.  Used by the `examples` subcommand and the acceptance suite.
struct CatalogEntry {
    std::string name;
    std::string note;
    Model model;
    NatureClass expected = NatureClass::DTranscendental;
    bool closed_form = false;       // build_phi1 applies
    bool density_1d = false;        // density() has a catalogued 1-D form
    bool density_2d = false;        // joint wedge-polar density applies
    bool moments_case = false;      // the fourth-order moment recurrence applies
    // Expected simple-condition integers when meaningful (r = 0 when unset).
    long long r = 0, k = 0;
};

const std::vector<CatalogEntry>& catalog();

const CatalogEntry& catalog_entry(const std::string& name);

}  // namespace srbm
