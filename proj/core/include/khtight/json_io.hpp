#pragma once

// JSON serialization of reports and inputs. Every writer returns compact
// JSON text (indent < 0) or pretty-printed text.

#include <string>
#include <string_view>
#include <vector>

#include "khtight/classical.hpp"
#include "khtight/filtered.hpp"
#include "khtight/lattice.hpp"
#include "khtight/surgery.hpp"
#include "khtight/verdict.hpp"

namespace khtight {

std::string to_json(const HomologyTable& h, int indent = -1);
std::string to_json(const VerdictReport& r, int indent = -1);
std::string to_json(const QACertificate& c, int indent = -1);
std::string to_json(const SurgeryDiagram& s, int indent = -1);
std::string to_json(const D3Result& d, int indent = -1);
std::string to_json(const PageReport& p, int indent = -1);
std::string to_json(const GramLattice& g, int indent = -1);
std::string to_json(const std::vector<Embedding>& e, int indent = -1);
std::string to_json(const Complement& c, int indent = -1);
std::string to_json(const ParityResult& p, int indent = -1);

/// Inverse of to_json(VerdictReport); timing and notes included.
VerdictReport verdict_from_json(std::string_view text);

/// `{"components":[{"tb":..,"rot":..,"coeff":..}], "linking":[[..]]}`.
SurgeryDiagram surgery_from_json(std::string_view text);

/// A JSON matrix, an object `{"gram": [[..]], "labels": [..]}`, or CSV rows.
GramLattice gram_from_text(std::string_view text);

}  // namespace khtight
