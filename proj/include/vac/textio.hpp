#pragma once

#include "vac/classify.hpp"
#include "vac/symalg.hpp"
#include "vac/uea.hpp"
#include "vac/vertex.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace vac {

// Text formats (one term per line, '#'-prefixed headers):
//   VaState:  "# algebra G2" / "# level -2" / "-60 * e[6](-3) e[5](-2)^2"
//   UeaElem:  "# algebra G2" / "72 * e[4] e[5] e[6]"
//   SymElem:  same as UeaElem (commutative)
//   MPoly:    "# vars 2" / "-24 h1^5 h2" (one monomial per line)
//   PolySet:  "# poly NAME" / "# chain f[4] f[4]" headers between blocks

VaState parse_va_state(std::istream& in);
VaState read_va_state(const std::string& path);
std::string print_va_state(const VaState& v);

UeaElem parse_uea(std::istream& in);
UeaElem read_uea(const std::string& path);
std::string print_uea(const UeaElem& u);

SymElem parse_sym(std::istream& in);
SymElem read_sym(const std::string& path);
std::string print_sym(const SymElem& s);

std::vector<PolyEntry> read_polyset_file(const std::string& path, int* nvars);
std::string print_polyset(const std::vector<PolyEntry>& entries, int nvars,
                           const Algebra* alg = nullptr);

std::vector<Weight> read_weight_list(const std::string& path);
std::string print_weight(const Weight& w);
Weight parse_weight(const std::string& s, int rank);

/// Directory with the shipped transcription data; from $VAC_DATA_DIR or
/// "data" relative to the working directory.
std::string data_dir();

} // namespace vac
