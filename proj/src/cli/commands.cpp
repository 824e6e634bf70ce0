#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include <openssl/evp.h>

#include "parahn/errors.hpp"
#include "parahn/io.hpp"

namespace parahn {

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

namespace {

struct Ctx {
  Spec spec;
  const RunOptions& opts;

  const ParabolicBundle& V() const {
    if (!spec.V) throw SchemaError("/flags: missing");
    return *spec.V;
  }
  const Json& block(const std::string& key) const {
    auto it = spec.raw.find(key);
    if (it == spec.raw.end()) throw SchemaError("/" + key + ": missing, required by this command");
    return *it;
  }
  std::optional<HNDatum> datum() const {
    if (opts.datum) return datum_from_list(*opts.datum);
    if (spec.raw.contains("datum")) return datum_from_json(spec.raw["datum"], "/datum");
    return std::nullopt;
  }
};

Json sub_record(const ParabolicBundle& V, const Subbundle& W) {
  Json j = to_json(W);
  j["parabolic_degree"] = parabolic_degree(V, W).str();
  j["quot"] = to_json(induced_quot_datum(V, W));
  return j;
}

Json filtration_json(const ParabolicBundle& V, const HNFiltration& F) {
  Json a = Json::array();
  for (const auto& st : F.steps) {
    Json j = sub_record(V, st.sub);
    j["slope"] = st.slope.str();
    a.push_back(j);
  }
  return a;
}

Json data_json(const std::vector<HNDatum>& ds) {
  Json a = Json::array();
  for (const auto& d : ds) a.push_back(to_json(d));
  return a;
}

std::vector<std::vector<int>> flag_type(const ParabolicBundle& V) {
  std::vector<std::vector<int>> t;
  for (const auto& fl : V.flags) t.push_back(fl.jumps);
  return t;
}

using Handler = std::function<Json(const Ctx&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"hn",
       [](const Ctx& c) {
         const auto& V = c.V();
         auto F = hn_filtration(V, c.opts.budget);
         return Json{{"datum", to_json(hn_datum(F))},
                     {"semistable", F.length() == 1},
                     {"parabolic_degree", parabolic_degree(V).str()},
                     {"slope", parabolic_slope(V).str()},
                     {"filtration", filtration_json(V, F)}};
       }},
      {"enum-sub",
       [](const Ctx& c) {
         const auto& V = c.V();
         const Json& e = c.block("enum");
         QuotDatum shape = quot_from_json(Json{{"rank", e.value("rank", Json())},
                                               {"degree", e.value("degree", Json())},
                                               {"jumps", Json::array()}},
                                          "/enum");
         int mct = shape.degree - (shape.rank - 1) * V.bundle.twists.front();
         if (e.contains("min_col_twist")) {
           if (!e["min_col_twist"].is_number_integer()) throw SchemaError("/enum/min_col_twist: expected an integer");
           mct = e["min_col_twist"].get<int>();
         }
         Json list = Json::array();
         for (auto& W : enumerate_subbundles(V.bundle, shape.rank, shape.degree, mct, c.opts.budget)) {
           list.push_back(sub_record(V, W));
         }
         return Json{{"count", list.size()}, {"subbundles", list}};
       }},
      {"strata",
       [](const Ctx& c) {
         const auto& V = c.V();
         auto P = c.datum();
         if (!P) throw SchemaError("/datum: missing, required by this command");
         auto w = find_P_destabilizing(V, *P, c.opts.budget);
         return Json{{"datum", to_json(*P)},
                     {"hn", to_json(hn_datum(V, c.opts.budget))},
                     {"member", !w.has_value()},
                     {"witness", w ? sub_record(V, *w) : Json()}};
       }},
      {"quot-points",
       [](const Ctx& c) {
         const auto& V = c.V();
         auto th = quot_from_json(c.block("quot"), "/quot");
         Json list = Json::array();
         for (auto& W : quot_points(V, th, c.opts.budget)) list.push_back(to_json(W));
         return Json{{"quot", to_json(th)}, {"count", list.size()}, {"points", list}};
       }},
      {"fil-points",
       [](const Ctx& c) {
         const auto& V = c.V();
         auto alpha = fil_from_json(c.block("fil"), "/fil");
         Json chains = Json::array();
         for (auto& ch : fil_points(V, alpha, c.opts.budget)) {
           Json a = Json::array();
           for (auto& W : ch) a.push_back(to_json(W));
           chains.push_back(a);
         }
         return Json{{"count", chains.size()}, {"chains", chains}};
       }},
      {"bounds-F",
       [](const Ctx& c) {
         const auto& V = c.V();
         HNDatum P = c.datum().value_or(hn_datum(V, c.opts.budget));
         auto set = enumerate_F(P, V.rank(), static_cast<int>(V.num_points()));
         return Json{{"P", to_json(P)}, {"count", set.size()}, {"data", data_json(set)}};
       }},
      {"bounds-B",
       [](const Ctx& c) {
         const auto& V = c.V();
         HNDatum Q = c.datum().value_or(hn_datum(V, c.opts.budget));
         if (Q.size() != static_cast<std::size_t>(V.rank())) throw LengthMismatch("datum length differs from rank");
         auto set = enumerate_B(Q, V.weights);
         return Json{{"Q", to_json(Q)}, {"count", set.size()}, {"data", data_json(set)}};
       }},
      {"sigma",
       [](const Ctx& c) {
         const auto& V = c.V();
         HNDatum P = c.datum().value_or(hn_datum(V, c.opts.budget));
         if (P.size() != static_cast<std::size_t>(V.rank())) throw LengthMismatch("datum length differs from rank");
         Json list = Json::array();
         for (auto& a : sigma_candidates(P, flag_type(V))) {
           Json steps = Json::array();
           for (auto& q : a) steps.push_back(to_json(q));
           list.push_back(steps);
         }
         return Json{{"P", to_json(P)}, {"count", list.size()}, {"candidates", list}};
       }},
      {"theta-weight",
       [](const Ctx& c) {
         const auto& V = c.V();
         auto F = theta_from_json(V, c.block("theta"), "/theta");
         Json chi = Json::array();
         for (std::size_t x = 0; x < V.num_points(); ++x) {
           std::size_t N = V.flags[x].length();
           for (std::size_t i = 1; i <= N; ++i) {
             for (std::size_t j = 1; j <= N; ++j) {
               if (i != j) chi.push_back(Json{{"point", x}, {"i", i}, {"j", j}, {"value", wt_chi(V, F, x, i, j)}});
             }
           }
         }
         return Json{{"wt_combined", wt_combined(V, F).str()},
                     {"wt_det", V.num_points() == 1 ? Json(wt_det(V, F).str()) : Json()},
                     {"wt_chi", chi}};
       }},
      {"admissible",
       [](const Ctx& c) {
         const auto& V = c.V();
         bool all = true;
         Json region = Json::array();
         for (std::size_t x = 0; x < V.num_points(); ++x) {
           auto r = is_admissible(V.rank(), V.flags[x].jumps, V.weights[x]);
           all = all && r.admissible;
           for (auto rec : to_json(r.region)) {
             rec["point"] = x;
             region.push_back(rec);
           }
         }
         return Json{{"admissible", all}, {"region", region}};
       }},
      {"family",
       [](const Ctx& c) {
         const Json& b = c.block("family");
         FlagFamily fam = family_from_json(c.spec, b, "/family");
         fam.extension *= c.opts.extend;
         const Field& big = fam.eval_field();
         std::vector<Elem> us;
         if (b.contains("evaluate")) {
           const Json& ev = b["evaluate"];
           if (!ev.is_array()) throw SchemaError("/family/evaluate: expected an array");
           for (std::size_t i = 0; i < ev.size(); ++i) {
             us.push_back(elem_from_json(big, ev[i], "/family/evaluate/" + std::to_string(i)));
           }
         }
         auto scan = family_scan(fam, us, c.opts.budget);
         Json data = Json::array(), above = Json::array();
         for (auto& [u, d] : scan.data) data.push_back(Json{{"u", to_json(big, u)}, {"datum", to_json(d)}});
         for (Elem u : scan.above) above.push_back(to_json(big, u));
         return Json{{"field", {{"p", big.p()}, {"k", big.k()}}},
                     {"data", data},
                     {"minimal", data_json(scan.minimal)},
                     {"above", above}};
       }},
      {"hom",
       [](const Ctx& c) {
         const auto& V = c.V();
         const Json& h = c.block("hom");
         if (!h.is_object() || !h.contains("target")) throw SchemaError("/hom/target: missing");
         auto B = parse_bundle(h["target"], "/hom/target");
         if (c.opts.extend > 1) B = extend_scalars(B, c.opts.extend);
         auto hs = hom_parabolic(V, B);
         Json basis = Json::array();
         for (std::size_t r = 0; r < hs.basis.rows(); ++r) {
           Json row = Json::array();
           for (std::size_t k = 0; k < hs.basis.cols(); ++k) row.push_back(to_json(V.field(), hs.basis.at(r, k)));
           basis.push_back(row);
         }
         return Json{{"dim", hs.dim}, {"basis", basis}};
       }},
  };
  return table;
}

Json error_json(const Error& e) {
  Json j{{"code", e.code()}, {"message", e.what()}};
  if (auto* b = dynamic_cast<const BudgetExceeded*>(&e)) {
    j["candidates"] = b->candidates();
    j["cap"] = b->cap();
  }
  return j;
}

}  // namespace

Report run_command(const std::string& cmd, const std::string& input, const RunOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  Report rep;
  rep.body = Json{{"command", cmd},
                  {"engine_version", kEngineVersion},
                  {"schema", kReportSchemaId},
                  {"input_digest", "sha256:" + sha256_hex(input)},
                  {"options",
                   {{"budget", opts.budget.cap},
                    {"extend", opts.extend},
                    {"datum", opts.datum ? Json(*opts.datum) : Json()}}}};
  try {
    auto it = handlers().find(cmd);
    if (it == handlers().end()) throw UnknownCommand("unknown command \"" + cmd + "\"");
    if (opts.extend < 1) throw InvalidDegree("--extend must be >= 1");
    Ctx ctx{parse_spec(input), opts};
    if (opts.extend > 1 && ctx.spec.V) ctx.spec.V = extend_scalars(*ctx.spec.V, opts.extend);
    rep.body["result"] = it->second(ctx);
    rep.body["status"] = "ok";
    rep.exit_code = 0;
  } catch (const BudgetExceeded& e) {
    rep.body["status"] = "error";
    rep.body["error"] = error_json(e);
    rep.exit_code = 2;
  } catch (const Error& e) {
    rep.body["status"] = "error";
    rep.body["error"] = error_json(e);
    rep.exit_code = 1;
  }
  rep.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::string render_json(const Report& r, bool with_timing) {
  Json j = r.body;
  j["payload_digest"] = "sha256:" + sha256_hex(r.body.dump());
  if (with_timing) j["timing_ms"] = static_cast<long>(r.timing_ms + 0.5);
  return j.dump(2) + "\n";
}

namespace {

std::string scalar(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "none";
  return j.dump();
}

bool flat(const Json& j) {
  if (!j.is_array()) return !j.is_object();
  for (const auto& x : j) {
    if (!flat(x)) return false;
  }
  return true;
}

std::string inline_value(const Json& j) {
  if (!j.is_array()) return scalar(j);
  std::string s = "(";
  for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + inline_value(j[i]);
  return s + ")";
}

void render(std::ostringstream& os, const Json& j, int depth) {
  std::string pad(2 * depth, ' ');
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (flat(it.value())) {
        os << pad << "- **" << it.key() << "**: " << inline_value(it.value()) << "\n";
      } else {
        os << pad << "- **" << it.key() << "**:\n";
        render(os, it.value(), depth + 1);
      }
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (flat(j[i])) {
        os << pad << i + 1 << ". " << inline_value(j[i]) << "\n";
      } else {
        os << pad << i + 1 << ".\n";
        render(os, j[i], depth + 1);
      }
    }
  } else {
    os << pad << scalar(j) << "\n";
  }
}

}  // namespace

std::string render_markdown(const Report& r) {
  std::ostringstream os;
  const Json& b = r.body;
  os << "# parahn " << b["command"].get<std::string>() << "\n\n";
  os << "| field | value |\n|---|---|\n";
  os << "| status | " << b["status"].get<std::string>() << " |\n";
  os << "| engine_version | " << b["engine_version"].get<std::string>() << " |\n";
  os << "| input_digest | `" << b["input_digest"].get<std::string>() << "` |\n";
  os << "| timing_ms | " << static_cast<long>(r.timing_ms + 0.5) << " |\n\n";
  if (b.contains("result")) {
    os << "## Result\n\n";
    render(os, b["result"], 0);
  }
  if (b.contains("error")) {
    os << "## Error\n\n";
    render(os, b["error"], 0);
  }
  return os.str();
}

}  // namespace parahn
