#include <sstream>

#include "parahn/errors.hpp"
#include "parahn/io.hpp"

namespace parahn {

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& what) {
  throw SchemaError((path.empty() ? "/" : path) + ": " + what);
}

const Json& member(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) schema(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema(path + "/" + key, "missing");
  return *it;
}

long as_long(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return j.get<long>();
  if (j.is_string()) {
    const std::string& s = j.get_ref<const std::string&>();
    std::size_t pos = 0;
    long v = 0;
    try {
      v = std::stol(s, &pos);
    } catch (const std::exception&) {
      schema(path, "expected an integer, got \"" + s + "\"");
    }
    if (pos != s.size()) schema(path, "expected an integer, got \"" + s + "\"");
    return v;
  }
  schema(path, "expected an integer");
}

int as_int(const Json& j, const std::string& path) { return static_cast<int>(as_long(j, path)); }

const Json& as_array(const Json& j, const std::string& path) {
  if (!j.is_array()) schema(path, "expected an array");
  return j;
}

std::vector<int> int_list(const Json& j, const std::string& path) {
  std::vector<int> out;
  const Json& a = as_array(j, path);
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(as_int(a[i], path + "/" + std::to_string(i)));
  return out;
}

Rat rat_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (!j.is_string()) schema(path, "expected a rational string \"a/b\"");
  try {
    return Rat::parse(j.get_ref<const std::string&>());
  } catch (const ParseError& e) {
    schema(path, e.what());
  }
}

Poly poly_from_json(const Field& f, const Json& j, const std::string& path) {
  std::vector<Elem> c;
  const Json& a = as_array(j, path);
  for (std::size_t i = 0; i < a.size(); ++i) c.push_back(elem_from_json(f, a[i], path + "/" + std::to_string(i)));
  return Poly(f, c);
}

Mat rows_from_json(const Field& f, const Json& j, std::size_t n, const std::string& path) {
  const Json& a = as_array(j, path);
  Mat m(f, 0, n);
  for (std::size_t r = 0; r < a.size(); ++r) {
    std::string p = path + "/" + std::to_string(r);
    const Json& row = as_array(a[r], p);
    if (row.size() != n) throw ConsistencyError(p + ": vector of length " + std::to_string(row.size()) +
                                                ", rank is " + std::to_string(n));
    std::vector<Elem> v;
    for (std::size_t c = 0; c < n; ++c) v.push_back(elem_from_json(f, row[c], p + "/" + std::to_string(c)));
    m.append_row(v);
  }
  return m;
}

}  // namespace

Json to_json(const Field& f, Elem x) {
  if (f.k() == 1) return std::to_string(x);
  Json a = Json::array();
  for (auto c : f.coeffs(x)) a.push_back(std::to_string(c));
  return a;
}

Elem elem_from_json(const Field& f, const Json& j, const std::string& path) {
  if (j.is_array()) {
    if (j.size() > f.k()) schema(path, "more than " + std::to_string(f.k()) + " coefficients");
    std::vector<std::uint32_t> c;
    for (std::size_t i = 0; i < j.size(); ++i) {
      long v = as_long(j[i], path + "/" + std::to_string(i));
      if (v < 0 || v >= f.p()) throw ConsistencyError(path + ": coefficient " + std::to_string(v) + " outside [0, p)");
      c.push_back(static_cast<std::uint32_t>(v));
    }
    c.resize(f.k(), 0);
    return f.from_coeffs(c);
  }
  long v = as_long(j, path);
  if (f.k() != 1) schema(path, "elements of " + f.name() + " are coefficient arrays");
  if (v < 0 || v >= f.p()) throw ConsistencyError(path + ": element " + std::to_string(v) + " outside [0, p)");
  return static_cast<Elem>(v);
}

Json to_json(const Rat& r) { return r.str(); }

Json to_json(const HNDatum& d) {
  Json a = Json::array();
  for (const auto& x : d) a.push_back(x.str());
  return a;
}

Json to_json(const QuotDatum& q) { return Json{{"rank", q.rank}, {"degree", q.degree}, {"jumps", q.jumps}}; }

Json to_json(const Subbundle& W) {
  const Field& f = W.field();
  Json m = Json::array();
  for (std::size_t j = 0; j < W.mat.rows(); ++j) {
    Json row = Json::array();
    for (std::size_t k = 0; k < W.mat.cols(); ++k) {
      Json p = Json::array();
      for (Elem c : W.mat.at(j, k).coeffs()) p.push_back(to_json(f, c));
      row.push_back(p);
    }
    m.push_back(row);
  }
  return Json{{"rank", W.rank()}, {"degree", W.degree()}, {"col_twists", W.col_twists}, {"matrix", m}};
}

Json to_json(const ParabolicBundle& V) {
  const Field& f = V.field();
  Json pts = Json::array(), ws = Json::array(), fls = Json::array();
  for (Elem x : V.points) pts.push_back(to_json(f, x));
  for (const auto& w : V.weights) ws.push_back(to_json(HNDatum(w)));
  for (const auto& fl : V.flags) {
    Json subs = Json::array();
    for (std::size_t m = 0; m + 1 < fl.chain.size(); ++m) {
      Json rows = Json::array();
      for (std::size_t r = 0; r < fl.chain[m].rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < fl.chain[m].cols(); ++c) row.push_back(to_json(f, fl.chain[m].at(r, c)));
        rows.push_back(row);
      }
      subs.push_back(rows);
    }
    fls.push_back(Json{{"jumps", fl.jumps}, {"subspaces", subs}});
  }
  return Json{{"field", {{"p", f.p()}, {"k", f.k()}}},
              {"splitting_type", V.bundle.twists},
              {"points", pts},
              {"weights", ws},
              {"flags", fls}};
}

Json to_json(const WeightRegion& R) {
  Json a = Json::array();
  for (const auto& c : R.constraints) {
    a.push_back(Json{{"coeffs", to_json(HNDatum(c.coeffs))}, {"relation", c.relation}, {"rhs", c.rhs.str()}});
  }
  return a;
}

HNDatum datum_from_json(const Json& j, const std::string& path) {
  HNDatum d;
  const Json& a = as_array(j, path);
  for (std::size_t i = 0; i < a.size(); ++i) d.push_back(rat_from_json(a[i], path + "/" + std::to_string(i)));
  for (std::size_t i = 1; i < d.size(); ++i) {
    if (d[i] > d[i - 1]) throw ConsistencyError(path + ": HN datum must be nonincreasing");
  }
  return d;
}

HNDatum datum_from_list(const std::string& csv) {
  Json a = Json::array();
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) a.push_back(item);
  return datum_from_json(a, "--datum");
}

QuotDatum quot_from_json(const Json& j, const std::string& path) {
  QuotDatum q;
  q.rank = as_int(member(j, "rank", path), path + "/rank");
  q.degree = as_int(member(j, "degree", path), path + "/degree");
  const Json& jumps = as_array(member(j, "jumps", path), path + "/jumps");
  for (std::size_t i = 0; i < jumps.size(); ++i) q.jumps.push_back(int_list(jumps[i], path + "/jumps/" + std::to_string(i)));
  return q;
}

namespace {

const Field& field_from_json(const Json& doc, const std::string& path) {
  const Json& fj = member(doc, "field", path);
  long p = as_long(member(fj, "p", path + "/field"), path + "/field/p");
  long k = fj.contains("k") ? as_long(fj["k"], path + "/field/k") : 1;
  try {
    return field_make(p, k);
  } catch (const Error& e) {
    throw ConsistencyError(path + "/field: " + e.what());
  }
}

SplitBundle split_from_json(const Field& f, const Json& doc, const std::string& path) {
  auto tw = int_list(member(doc, "splitting_type", path), path + "/splitting_type");
  try {
    return split_bundle(f, tw);
  } catch (const InvalidBundle& e) {
    throw ConsistencyError(path + "/splitting_type: " + e.what());
  }
}

std::vector<Elem> points_from_json(const Field& f, const Json& doc, const std::string& path) {
  std::vector<Elem> pts;
  const Json& a = as_array(member(doc, "points", path), path + "/points");
  for (std::size_t i = 0; i < a.size(); ++i) pts.push_back(elem_from_json(f, a[i], path + "/points/" + std::to_string(i)));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (pts[i] == pts[j]) throw ConsistencyError(path + "/points/" + std::to_string(i) + ": duplicate point");
    }
  }
  return pts;
}

std::vector<std::vector<Rat>> weights_from_json(const Json& doc, std::size_t npts, const std::string& path) {
  std::vector<std::vector<Rat>> ws;
  const Json& a = as_array(member(doc, "weights", path), path + "/weights");
  if (a.size() != npts) {
    throw ConsistencyError(path + "/weights: " + std::to_string(a.size()) + " weight lists for " +
                           std::to_string(npts) + " points");
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::string p = path + "/weights/" + std::to_string(i);
    std::vector<Rat> w;
    const Json& li = as_array(a[i], p);
    for (std::size_t m = 0; m < li.size(); ++m) w.push_back(rat_from_json(li[m], p + "/" + std::to_string(m)));
    for (std::size_t m = 0; m < w.size(); ++m) {
      if (w[m] <= Rat(0) || w[m] >= Rat(1)) throw ConsistencyError(p + ": weights must lie in (0,1)");
      if (m > 0 && !(w[m - 1] < w[m])) throw ConsistencyError(p + ": weights must increase strictly");
    }
    ws.push_back(std::move(w));
  }
  return ws;
}

}  // namespace

ParabolicBundle parse_bundle(const Json& doc, const std::string& path) {
  const Field& f = field_from_json(doc, path);
  SplitBundle E = split_from_json(f, doc, path);
  auto pts = points_from_json(f, doc, path);
  auto ws = weights_from_json(doc, pts.size(), path);
  const Json& fa = as_array(member(doc, "flags", path), path + "/flags");
  if (fa.size() != pts.size()) {
    throw ConsistencyError(path + "/flags: " + std::to_string(fa.size()) + " flags for " + std::to_string(pts.size()) +
                           " points");
  }
  std::vector<Flag> flags;
  std::size_t n = E.rank();
  for (std::size_t i = 0; i < fa.size(); ++i) {
    std::string p = path + "/flags/" + std::to_string(i);
    auto jumps = int_list(member(fa[i], "jumps", p), p + "/jumps");
    std::vector<Mat> proper;
    const Json& subs = as_array(member(fa[i], "subspaces", p), p + "/subspaces");
    for (std::size_t m = 0; m < subs.size(); ++m) {
      proper.push_back(rows_from_json(f, subs[m], n, p + "/subspaces/" + std::to_string(m)));
    }
    if (jumps.size() != ws[i].size()) {
      throw ConsistencyError(p + "/jumps: " + std::to_string(jumps.size()) + " jumps for " +
                             std::to_string(ws[i].size()) + " weights");
    }
    try {
      flags.push_back(make_flag(f, static_cast<int>(n), jumps, proper));
    } catch (const ConsistencyError& e) {
      throw ConsistencyError(p + ": " + e.what());
    }
  }
  try {
    return make_parabolic(E, pts, flags, ws);
  } catch (const ConsistencyError& e) {
    throw ConsistencyError((path.empty() ? "/" : path) + ": " + e.what());
  }
}

Spec parse_spec(const std::string& text) {
  Spec s;
  try {
    s.raw = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!s.raw.is_object()) schema("", "expected an object");
  s.field = &field_from_json(s.raw, "");
  s.bundle = split_from_json(*s.field, s.raw, "");
  if (s.raw.contains("flags") || !s.raw.contains("family")) s.V = parse_bundle(s.raw);
  return s;
}

PolyMat polymat_from_json(const Field& f, const Json& j, std::size_t rows, std::size_t cols, const std::string& path) {
  const Json& a = as_array(j, path);
  if (a.size() != rows) {
    throw ConsistencyError(path + ": " + std::to_string(a.size()) + " rows, expected " + std::to_string(rows));
  }
  PolyMat m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    std::string pr = path + "/" + std::to_string(r);
    const Json& row = as_array(a[r], pr);
    if (row.size() != cols) {
      throw ConsistencyError(pr + ": " + std::to_string(row.size()) + " entries, expected " + std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = poly_from_json(f, row[c], pr + "/" + std::to_string(c));
  }
  return m;
}

Subbundle subbundle_from_json(const SplitBundle& E, const Json& j, const std::string& path) {
  auto d = int_list(member(j, "col_twists", path), path + "/col_twists");
  if (d.empty()) return zero_subbundle(E);
  PolyMat M = polymat_from_json(*E.field, member(j, "matrix", path), E.rank(), d.size(), path + "/matrix");
  try {
    return make_subbundle(E, d, M);
  } catch (const Error& e) {
    throw ConsistencyError(path + ": " + e.what());
  }
}

FiltrationDatum fil_from_json(const Json& j, const std::string& path) {
  FiltrationDatum out;
  const Json& a = as_array(j, path);
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(quot_from_json(a[i], path + "/" + std::to_string(i)));
  return out;
}

ThetaFiltration theta_from_json(const ParabolicBundle& V, const Json& j, const std::string& path) {
  ThetaFiltration F;
  const Json& steps = as_array(member(j, "steps", path), path + "/steps");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    std::string p = path + "/steps/" + std::to_string(i);
    int w = as_int(member(steps[i], "weight", p), p + "/weight");
    F.steps.push_back({w, subbundle_from_json(V.bundle, steps[i], p)});
  }
  return F;
}

FlagFamily family_from_json(const Spec& spec, const Json& j, const std::string& path) {
  FlagFamily fam;
  const Field& f = *spec.field;
  fam.bundle = spec.bundle;
  fam.points = points_from_json(f, spec.raw, "");
  fam.weights = weights_from_json(spec.raw, fam.points.size(), "");
  fam.extension = j.contains("extension") ? as_int(j["extension"], path + "/extension") : 1;
  if (fam.extension < 1) throw ConsistencyError(path + "/extension: must be >= 1");
  const Json& flags = as_array(member(j, "flags", path), path + "/flags");
  if (flags.size() != fam.points.size()) {
    throw ConsistencyError(path + "/flags: " + std::to_string(flags.size()) + " flags for " +
                           std::to_string(fam.points.size()) + " points");
  }
  std::size_t n = fam.bundle.rank();
  for (std::size_t i = 0; i < flags.size(); ++i) {
    std::string p = path + "/flags/" + std::to_string(i);
    fam.jumps.push_back(int_list(member(flags[i], "jumps", p), p + "/jumps"));
    std::vector<PolyMat> gens;
    const Json& subs = as_array(member(flags[i], "subspaces", p), p + "/subspaces");
    for (std::size_t m = 0; m < subs.size(); ++m) {
      std::string q = p + "/subspaces/" + std::to_string(m);
      const Json& rows = as_array(subs[m], q);
      PolyMat g(f, rows.size(), n);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        const Json& row = as_array(rows[r], q + "/" + std::to_string(r));
        if (row.size() != n) throw ConsistencyError(q + "/" + std::to_string(r) + ": vector length differs from rank");
        for (std::size_t c = 0; c < n; ++c) {
          g.at(r, c) = poly_from_json(f, row[c], q + "/" + std::to_string(r) + "/" + std::to_string(c));
        }
      }
      gens.push_back(std::move(g));
    }
    fam.generators.push_back(std::move(gens));
  }
  return fam;
}

}  // namespace parahn
