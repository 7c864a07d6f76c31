// Copyright 2026 The invforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON forms of polynomials, bases, states, channels and results.
//
// Exact rationals are written as "p/q" strings (always with a denominator).
// Float values are JSON numbers. Readers accept either form where a float is
// expected and reject floats where an exact value is required.

#pragma once

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>

#include "invforge/equivalence.hpp"
#include "invforge/invariants.hpp"
#include "invforge/poly.hpp"
#include "invforge/states.hpp"

namespace invforge {

using Json = nlohmann::ordered_json;

Json shape_to_json(const SystemShape& shape);
SystemShape shape_from_json(const Json& j);

/// {"shape", "bidegree", "terms": [{"xs", "xbars", "re", "im"}]}.
Json to_json(const SparsePoly& p);
SparsePoly poly_from_json(const Json& j);

/// {"group", "shape", "half_degree" | "degree", "dimension", "polys"}; SLU
/// bases also carry "ancilla" (the last entry of "shape").
Json to_json(const InvariantBasis& b);
InvariantBasis basis_from_json(const Json& j, const ResourceGuard& guard = ResourceGuard::from_env());

/// {"shape", "mode", "amplitudes": [{"index", "re", "im"}]}; zero
/// amplitudes are omitted.
Json to_json(const StateVector& s);
StateVector state_from_json(const Json& j);

/// {"shape", "mode", "entries": [{"row", "col", "re", "im"}]}.
Json to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const Json& j);

/// {"input_dim", "output_dim", "kraus": [{"entries": [{"row", "col", "re",
/// "im"}]}]}; values may be numbers or rational strings.
Json to_json(const KrausChannel& c);
KrausChannel channel_from_json(const Json& j);

Json to_json(const InvariantValue& v);
Json to_json(const Fingerprint& fp);
Json to_json(const Verdict& v);
Json to_json(const InvarianceReport& r);
Json bound_to_json(Group group, const SystemShape& shape, const DegreeBound& b);

/// Throws ParseError on unreadable files or malformed JSON.
Json read_json_file(const std::string& path);
/// Two-space indented dump plus a trailing newline.
std::string dump(const Json& j);
/// Writes to `path`, or stdout when absent.
void write_output(const Json& j, const std::optional<std::string>& path);

}  // namespace invforge
