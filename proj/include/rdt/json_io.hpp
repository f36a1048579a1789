#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "rdt/embedding.hpp"
#include "rdt/rootdatum.hpp"
#include "rdt/spectrum.hpp"

namespace rdt {

using ordered_json = nlohmann::ordered_json;

/// Canonical datum document: {"dim", "gram", "lattice_basis", "roots"} with
/// rationals as lowest-term strings, basis columns and root rows as arrays.
ordered_json datum_to_json(const EuclideanRootDatum& d);

/// Parses and validates the structural schema (symmetric SPD gram, full
/// independent basis, well-formed rationals). Throws DomainError with a
/// location on malformed input.
EuclideanRootDatum datum_from_json(const ordered_json& j);

EuclideanRootDatum load_datum_file(const std::string& path);
void save_datum_file(const EuclideanRootDatum& d, const std::string& path);

ordered_json lattice_to_json(const Lattice& L);
Lattice lattice_from_json(const ordered_json& j);
ordered_json group_to_json(const AbelianGroupStructure& g);
ordered_json classification_to_json(const ClassificationReport& rep);
ordered_json spectrum_to_json(const std::vector<SpectrumEntry>& entries);
ordered_json check_report_to_json(const CheckReport& rep);

}  // namespace rdt
