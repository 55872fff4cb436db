#pragma once

#include <memory>
#include <string>

#include <json.hpp>

#include "thinpl/pl_word.hpp"
#include "thinpl/thin_group.hpp"

namespace thinpl {

// Complex file: {"ambient_dim": N, "vertices": [{"id": "...", "coords":
// ["0","1/2",...]}], "simplices": [["A","B"],...], "basepoint": "A"}.
// Loop/path file: {"kind": "loop"|"path", "points": [["0","0"],...]}.
// Rational strings follow the parse_rational grammar; printing is canonical,
// so parse(print(w)) = w exactly.

ComplexSpec complex_spec_from_json(const nlohmann::json& j);
PLWord word_from_json(const nlohmann::json& j,
                      std::shared_ptr<const SimplicialComplex> complex);

nlohmann::json point_to_json(const Point& p);
nlohmann::json points_to_json(const std::vector<Point>& pts);
nlohmann::json word_to_json(const PLWord& w);
nlohmann::json trace_to_json(const ReductionTrace& trace);

/// Parses text as JSON; parse errors are rethrown as
/// DomainError(ParseError) with a "line L, column C" location.
nlohmann::json parse_json_text(const std::string& text, const std::string& origin);

std::string read_file(const std::string& path);

std::shared_ptr<const SimplicialComplex> load_complex(const std::string& path);
PLWord load_word(const std::string& path,
                 std::shared_ptr<const SimplicialComplex> complex);

}  // namespace thinpl
