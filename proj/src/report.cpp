#include "hypermatch/report.hpp"

#include <sstream>

namespace hypermatch {

Format format_from_string(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "tsv") return Format::tsv;
  throw Error("unknown format: " + name);
}

Json big_to_json(const mpz_class& x) {
  if (sgn(x) >= 0 && x.fits_ulong_p()) return Json(static_cast<std::uint64_t>(x.get_ui()));
  if (x.fits_slong_p()) return Json(static_cast<std::int64_t>(x.get_si()));
  return Json(x.get_str());
}

mpz_class big_from_json(const Json& j) {
  if (j.is_string()) return mpz_class(j.get<std::string>());
  if (j.is_number_unsigned()) return mpz_class(static_cast<unsigned long>(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<std::int64_t>()));
  throw Error("expected an integer");
}

Json to_json(const BoundReport& r) {
  Json a = Json::array();
  for (const auto& x : r.a_bounds) a.push_back(big_to_json(x));
  return Json{{"n", r.n},
              {"k", r.k},
              {"s", r.s},
              {"cover_bound", big_to_json(r.cover_bound)},
              {"clique_bound", big_to_json(r.clique_bound)},
              {"hm_bound", big_to_json(r.hm_bound)},
              {"a_bounds", std::move(a)},
              {"max_nontrivial", big_to_json(r.max_nontrivial)}};
}

BoundReport bound_report_from_json(const Json& j) {
  BoundReport r;
  r.n = j.at("n").get<int>();
  r.k = j.at("k").get<int>();
  r.s = j.at("s").get<int>();
  r.cover_bound = big_from_json(j.at("cover_bound"));
  r.clique_bound = big_from_json(j.at("clique_bound"));
  r.hm_bound = big_from_json(j.at("hm_bound"));
  for (const auto& x : j.at("a_bounds")) r.a_bounds.push_back(big_from_json(x));
  r.max_nontrivial = big_from_json(j.at("max_nontrivial"));
  return r;
}

std::string tsv_header(const BoundReport& r) {
  std::string h = "n\tk\ts\tcover\tclique\thm";
  for (std::size_t i = 0; i < r.a_bounds.size(); ++i) h += "\ta" + std::to_string(i + 2);
  return h + "\tmax_nontrivial";
}

std::string to_tsv(const BoundReport& r) {
  std::ostringstream out;
  out << r.n << '\t' << r.k << '\t' << r.s << '\t' << r.cover_bound << '\t' << r.clique_bound
      << '\t' << r.hm_bound;
  for (const auto& x : r.a_bounds) out << '\t' << x;
  out << '\t' << r.max_nontrivial;
  return out.str();
}

Json to_json(const VerifyResult& r) {
  Json witnesses = Json::array();
  for (const auto& h : r.extremal_witnesses) witnesses.push_back(to_json(h));
  return Json{{"n", r.n},
              {"k", r.k},
              {"s", r.s},
              {"constraint", to_string(r.constraint)},
              {"method", r.method},
              {"complete", r.complete},
              {"searched", r.searched},
              {"max_edges_found", r.max_edges_found},
              {"expected", big_to_json(r.expected)},
              {"matches_bound", r.matches_bound},
              {"extremal_witnesses", std::move(witnesses)}};
}

VerifyResult verify_result_from_json(const Json& j) {
  VerifyResult r;
  r.n = j.at("n").get<int>();
  r.k = j.at("k").get<int>();
  r.s = j.at("s").get<int>();
  r.constraint = constraint_from_string(j.at("constraint").get<std::string>());
  r.method = j.at("method").get<std::string>();
  r.complete = j.at("complete").get<bool>();
  r.searched = j.at("searched").get<std::uint64_t>();
  r.max_edges_found = j.at("max_edges_found").get<std::uint64_t>();
  r.expected = big_from_json(j.at("expected"));
  r.matches_bound = j.at("matches_bound").get<bool>();
  for (const auto& w : j.at("extremal_witnesses")) {
    r.extremal_witnesses.push_back(hypergraph_from_json(w));
  }
  return r;
}

std::string to_tsv(const VerifyResult& r) {
  std::ostringstream out;
  out << "n\tk\ts\tconstraint\tmethod\tcomplete\tsearched\tmax_edges\texpected\tmatches\twitnesses\n"
      << r.n << '\t' << r.k << '\t' << r.s << '\t' << to_string(r.constraint) << '\t' << r.method
      << '\t' << r.complete << '\t' << r.searched << '\t' << r.max_edges_found << '\t'
      << r.expected << '\t' << r.matches_bound << '\t' << r.extremal_witnesses.size();
  return out.str();
}

Json to_json(const ClosenessReport& r) {
  return Json{{"target", to_string(r.target)},
              {"search", to_string(r.search)},
              {"s", r.s},
              {"part", r.part},
              {"missing_edges", r.missing_edges},
              {"epsilon_effective", r.epsilon_effective},
              {"exhaustive", r.exhaustive}};
}

std::string to_tsv(const ClosenessReport& r) {
  std::ostringstream out;
  out << "target\tsearch\ts\tmissing_edges\tepsilon\tpart\n"
      << to_string(r.target) << '\t' << to_string(r.search) << '\t' << r.s << '\t'
      << r.missing_edges << '\t' << r.epsilon_effective << '\t';
  for (std::size_t i = 0; i < r.part.size(); ++i) out << (i ? "," : "") << r.part[i];
  return out.str();
}

Json to_json(const GoodnessReport& r) {
  return Json{{"theta", r.theta},
              {"threshold", r.threshold},
              {"good", r.good},
              {"bad", r.bad},
              {"deficiency", r.deficiency}};
}

Json to_json(const BoundTable& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows) {
    rows.push_back({{"s", r.s},
                    {"cover", big_to_json(r.cover)},
                    {"clique", big_to_json(r.clique)},
                    {"hm", big_to_json(r.hm)},
                    {"winner", r.winner},
                    {"f", r.f_value}});
  }
  Json j{{"n", t.n}, {"rows", std::move(rows)}};
  j["clique_overtakes_at"] = t.clique_overtakes_at ? Json(*t.clique_overtakes_at) : Json(nullptr);
  return j;
}

std::string to_tsv(const BoundTable& t) {
  std::ostringstream out;
  out << "n\ts\tcover\tclique\thm\twinner\tf(s/n)\n";
  out.precision(10);
  for (const auto& r : t.rows) {
    out << t.n << '\t' << r.s << '\t' << r.cover << '\t' << r.clique << '\t' << r.hm << '\t'
        << r.winner << '\t' << r.f_value << '\n';
  }
  return out.str();
}

Json to_json(const FractionalAssignment& f) {
  Json j{{"kind", f.kind == FractionalAssignment::Kind::matching ? "matching" : "cover"},
         {"mode", f.mode == LpMode::rational ? "rational" : "float"},
         {"value", f.value},
         {"weights", f.weights}};
  if (f.mode == LpMode::rational) {
    Json exact = Json::array();
    for (const auto& w : f.exact_weights) exact.push_back(w.get_str());
    j["exact_value"] = f.exact_value.get_str();
    j["exact_weights"] = std::move(exact);
  }
  return j;
}

Json to_json(const DualityReport& r) {
  Json j{{"mode", r.mode == LpMode::rational ? "rational" : "float"},
         {"nu_star", r.nu_star},
         {"tau_star", r.tau_star},
         {"gap", r.gap}};
  if (r.exact_nu_star) j["exact_nu_star"] = r.exact_nu_star->get_str();
  if (r.exact_tau_star) j["exact_tau_star"] = r.exact_tau_star->get_str();
  return j;
}

}  // namespace hypermatch
