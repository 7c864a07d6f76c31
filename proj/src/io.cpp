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

#include "invforge/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "invforge/errors.hpp"

namespace invforge {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

std::uint64_t natural(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
    throw ParseError(std::string(what) + ": expected a nonnegative integer");
  }
  return j.get<std::uint64_t>();
}

mpq_class exact_part(const Json& j, const char* what) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return mpq_class(j.get<long>());
  throw ParseError(std::string(what) + ": exact values must be \"p/q\" strings or integers");
}

double float_part(const Json& j, const char* what) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return parse_rational(j.get<std::string>()).get_d();
  throw ParseError(std::string(what) + ": expected a number or \"p/q\" string");
}

Scalar exact_value(const Json& j, const char* what) {
  const mpq_class im = j.contains("im") ? exact_part(j["im"], what) : mpq_class(0);
  return Scalar(exact_part(field(j, "re"), what), im);
}

Complex float_value(const Json& j, const char* what) {
  const double im = j.contains("im") ? float_part(j["im"], what) : 0.0;
  return {float_part(field(j, "re"), what), im};
}

void put_exact(Json& j, const Scalar& s) {
  j["re"] = rational_to_string(s.re());
  j["im"] = rational_to_string(s.im());
}

void put_float(Json& j, Complex c) {
  j["re"] = c.real();
  j["im"] = c.imag();
}

Mode mode_from_json(const Json& j) {
  const auto name = field(j, "mode").get<std::string>();
  if (name == "exact") return Mode::Exact;
  if (name == "float") return Mode::Float;
  throw ParseError("mode must be \"exact\" or \"float\", got '" + name + "'");
}

const char* mode_name(Mode m) { return m == Mode::Exact ? "exact" : "float"; }

std::vector<std::uint32_t> index_list(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array");
  std::vector<std::uint32_t> out;
  for (const auto& v : j) out.push_back(static_cast<std::uint32_t>(natural(v, what)));
  return out;
}

template <typename F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

Json shape_to_json(const SystemShape& shape) {
  Json a = Json::array();
  for (unsigned d : shape.dims()) a.push_back(d);
  return a;
}

SystemShape shape_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("shape: expected a nonempty array");
  std::vector<unsigned> dims;
  for (const auto& v : j) dims.push_back(static_cast<unsigned>(natural(v, "shape")));
  try {
    return SystemShape(dims);
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("shape: ") + e.what());
  }
}

// ---------------------------------------------------------------------------

Json to_json(const SparsePoly& p) {
  Json j;
  j["shape"] = shape_to_json(p.shape());
  j["bidegree"] = Json::array({p.bidegree().p, p.bidegree().q});
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json t;
    t["xs"] = m.xs;
    t["xbars"] = m.xbars;
    put_exact(t, c);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

SparsePoly poly_from_json(const Json& j) {
  return guarded([&] {
    const SystemShape shape = shape_from_json(field(j, "shape"));
    const Json& bd = field(j, "bidegree");
    if (!bd.is_array() || bd.size() != 2) throw ParseError("bidegree: expected [p, q]");
    const Bidegree b{static_cast<unsigned>(natural(bd[0], "bidegree")),
                     static_cast<unsigned>(natural(bd[1], "bidegree"))};
    SparsePoly p(shape, b);
    for (const auto& t : field(j, "terms")) {
      BiMonomial m{index_list(field(t, "xs"), "xs"), index_list(field(t, "xbars"), "xbars")};
      try {
        p.add_term(std::move(m), exact_value(t, "term"));
      } catch (const DimensionMismatch& e) {
        throw ParseError(std::string("term: ") + e.what());
      }
    }
    return p;
  });
}

Json to_json(const InvariantBasis& b) {
  Json j;
  j["group"] = std::string(group_name(b.group));
  j["shape"] = shape_to_json(b.shape);
  if (b.group == Group::Sl) {
    j["degree"] = b.degree;
  } else {
    j["half_degree"] = b.degree;
  }
  if (b.group == Group::Slu) j["ancilla"] = b.shape.dims().back();
  j["dimension"] = b.dimension();
  Json polys = Json::array();
  for (const auto& p : b.polys()) polys.push_back(to_json(p));
  j["polys"] = std::move(polys);
  return j;
}

InvariantBasis basis_from_json(const Json& j, const ResourceGuard& guard) {
  return guarded([&] {
    InvariantBasis b;
    b.group = j.contains("group") ? parse_group(j["group"].get<std::string>()) : Group::Lu;
    b.shape = shape_from_json(field(j, "shape"));
    b.degree = static_cast<unsigned>(
        natural(field(j, b.group == Group::Sl ? "degree" : "half_degree"), "degree"));
    const Bidegree bd = b.group == Group::Sl ? Bidegree{b.degree, 0} : Bidegree{b.degree, b.degree};
    std::vector<SparsePoly> polys;
    for (const auto& p : field(j, "polys")) {
      polys.push_back(poly_from_json(p));
      if (!(polys.back().shape() == b.shape) || !(polys.back().bidegree() == bd)) {
        throw ParseError("basis: polynomial shape or bidegree differs from the header");
      }
    }
    b.space = PolySubspace::span(DegreeDescriptor(b.shape, bd, guard), polys);
    if (j.contains("dimension") && natural(j["dimension"], "dimension") != b.dimension()) {
      throw ParseError("basis: 'dimension' disagrees with the rank of 'polys'");
    }
    return b;
  });
}

// ---------------------------------------------------------------------------

Json to_json(const StateVector& s) {
  Json j;
  j["shape"] = shape_to_json(s.shape());
  j["mode"] = mode_name(s.mode());
  Json amps = Json::array();
  for (std::uint64_t i = 0; i < s.shape().total_dim(); ++i) {
    Json a;
    if (s.is_exact()) {
      const Scalar& v = s.exact_amplitudes()[i];
      if (v.is_zero()) continue;
      a["index"] = i;
      put_exact(a, v);
    } else {
      const Complex v = s.amplitudes()[i];
      if (v == Complex(0.0)) continue;
      a["index"] = i;
      put_float(a, v);
    }
    amps.push_back(std::move(a));
  }
  j["amplitudes"] = std::move(amps);
  return j;
}

StateVector state_from_json(const Json& j) {
  return guarded([&] {
    const SystemShape shape = shape_from_json(field(j, "shape"));
    const Mode mode = mode_from_json(j);
    const std::uint64_t n = shape.total_dim();
    std::vector<Scalar> exact(mode == Mode::Exact ? n : 0);
    std::vector<Complex> flt(mode == Mode::Float ? n : 0);
    for (const auto& a : field(j, "amplitudes")) {
      const std::uint64_t i = natural(field(a, "index"), "index");
      if (i >= n) throw ParseError("amplitude index " + std::to_string(i) + " out of range");
      if (mode == Mode::Exact) {
        exact[i] += exact_value(a, "amplitude");
      } else {
        flt[i] += float_value(a, "amplitude");
      }
    }
    return mode == Mode::Exact ? StateVector::exact(shape, std::move(exact))
                               : StateVector::from_float(shape, std::move(flt));
  });
}

Json to_json(const DensityMatrix& rho) {
  Json j;
  j["shape"] = shape_to_json(rho.shape());
  j["mode"] = mode_name(rho.mode());
  Json entries = Json::array();
  for (std::uint64_t r = 0; r < rho.dim(); ++r) {
    for (std::uint64_t c = 0; c < rho.dim(); ++c) {
      Json e;
      if (rho.is_exact()) {
        if (rho.entry(r, c).is_zero()) continue;
        e["row"] = r;
        e["col"] = c;
        put_exact(e, rho.entry(r, c));
      } else {
        const Complex v =
            rho.matrix()(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
        if (v == Complex(0.0)) continue;
        e["row"] = r;
        e["col"] = c;
        put_float(e, v);
      }
      entries.push_back(std::move(e));
    }
  }
  j["entries"] = std::move(entries);
  return j;
}

DensityMatrix density_from_json(const Json& j) {
  return guarded([&] {
    const SystemShape shape = shape_from_json(field(j, "shape"));
    const Mode mode = mode_from_json(j);
    const std::uint64_t n = shape.total_dim();
    std::vector<Scalar> exact(mode == Mode::Exact ? n * n : 0);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n),
                                                static_cast<Eigen::Index>(n));
    for (const auto& e : field(j, "entries")) {
      const std::uint64_t r = natural(field(e, "row"), "row");
      const std::uint64_t c = natural(field(e, "col"), "col");
      if (r >= n || c >= n) throw ParseError("density entry out of range");
      if (mode == Mode::Exact) {
        exact[r * n + c] += exact_value(e, "entry");
      } else {
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) += float_value(e, "entry");
      }
    }
    return mode == Mode::Exact ? DensityMatrix::exact(shape, std::move(exact))
                               : DensityMatrix::from_float(shape, std::move(m));
  });
}

Json to_json(const KrausChannel& c) {
  Json j;
  j["input_dim"] = c.input_dim();
  j["output_dim"] = c.output_dim();
  Json ops = Json::array();
  for (const auto& e : c.kraus_ops()) {
    Json entries = Json::array();
    for (Eigen::Index r = 0; r < e.rows(); ++r) {
      for (Eigen::Index col = 0; col < e.cols(); ++col) {
        if (e(r, col) == Complex(0.0)) continue;
        Json x;
        x["row"] = r;
        x["col"] = col;
        put_float(x, e(r, col));
        entries.push_back(std::move(x));
      }
    }
    ops.push_back(Json{{"entries", std::move(entries)}});
  }
  j["kraus"] = std::move(ops);
  return j;
}

KrausChannel channel_from_json(const Json& j) {
  return guarded([&] {
    const auto in = static_cast<unsigned>(natural(field(j, "input_dim"), "input_dim"));
    const auto out = static_cast<unsigned>(natural(field(j, "output_dim"), "output_dim"));
    std::vector<Eigen::MatrixXcd> ops;
    for (const auto& op : field(j, "kraus")) {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(out, in);
      for (const auto& e : field(op, "entries")) {
        const std::uint64_t r = natural(field(e, "row"), "row");
        const std::uint64_t c = natural(field(e, "col"), "col");
        if (r >= out || c >= in) throw ParseError("Kraus entry out of range");
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) += float_value(e, "entry");
      }
      ops.push_back(std::move(m));
    }
    KrausChannel ch(in, out, std::move(ops));
    if (!ch.is_trace_preserving()) throw InvalidArgument("channel is not trace preserving");
    return ch;
  });
}

// ---------------------------------------------------------------------------

Json to_json(const InvariantValue& v) {
  Json j;
  if (v.exact) {
    put_exact(j, *v.exact);
  } else {
    put_float(j, v.approx);
  }
  return j;
}

Json to_json(const Fingerprint& fp) {
  Json j;
  j["shape"] = shape_to_json(fp.shape);
  j["mode"] = mode_name(fp.mode);
  Json entries = Json::array();
  for (const auto& e : fp.entries) {
    Json x;
    x["half_degree"] = e.half_degree;
    Json values = Json::array();
    for (const auto& v : e.values) values.push_back(to_json(v));
    x["values"] = std::move(values);
    entries.push_back(std::move(x));
  }
  j["entries"] = std::move(entries);
  return j;
}

Json to_json(const Verdict& v) {
  Json j;
  j["verdict"] = std::string(verdict_name(v.kind));
  j["group"] = std::string(group_name(v.group));
  if (v.kind == VerdictKind::Distinguished) {
    j[v.group == Group::Sl ? "degree" : "half_degree"] = v.degree;
    j["basis_index"] = v.basis_index;
    if (v.denominator) {
      j["denominator"] = Json{{v.group == Group::Sl ? "degree" : "half_degree", v.denominator->first},
                              {"basis_index", v.denominator->second}};
    }
    j["value_a"] = to_json(v.value_a);
    j["value_b"] = to_json(v.value_b);
  }
  j["max_degree"] = v.max_degree;
  return j;
}

Json to_json(const InvarianceReport& r) {
  Json j;
  j["passed"] = r.passed;
  j["tol"] = r.tol;
  j["trials"] = r.trials;
  j["states_per_trial"] = r.states_per_trial;
  j["max_deviation"] = r.max_deviation;
  return j;
}

Json bound_to_json(Group group, const SystemShape& shape, const DegreeBound& b) {
  Json j;
  j["group"] = std::string(group_name(group));
  j["shape"] = shape_to_json(shape);
  j["parameters"] = Json{{"t", b.params.t.get_str()},
                         {"d", b.params.d.get_str()},
                         {"A", b.params.A.get_str()},
                         {"H", b.params.H.get_str()},
                         {"s", b.params.s.get_str()}};
  j["sigma"] = b.sigma.get_str();
  j["beta"] = rational_to_string(b.beta);
  j["ceiling"] = b.ceiling.get_str();
  j["single_party"] = b.single_party;
  return j;
}

// ---------------------------------------------------------------------------

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_output(const Json& j, const std::optional<std::string>& path) {
  const std::string text = dump(j);
  if (!path) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(*path, std::ios::binary);
  if (!out) throw Error("cannot write '" + *path + "'");
  out << text;
  if (!out) throw Error("write to '" + *path + "' failed");
}

}  // namespace invforge
