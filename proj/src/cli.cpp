#include "embhom/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>

#include "embhom/automorphism.hpp"
#include "embhom/bundle_order.hpp"
#include "embhom/checks/acceptance.hpp"
#include "embhom/embedded.hpp"
#include "embhom/io.hpp"
#include "embhom/persistence.hpp"

namespace embhom::cli {

namespace {

using nlohmann::json;

json betti_object(const std::vector<std::size_t>& b) {
  json out = json::object();
  for (std::size_t n = 0; n < b.size(); ++n) out[std::to_string(n)] = b[n];
  return out;
}

json radius(double r) { return std::isinf(r) ? json(nullptr) : json(r); }

std::string csv_radius(double r) {
  if (std::isinf(r)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", r);
  return buf;
}

json mpz_json(const mpz_class& z) {
  if (z.fits_ulong_p()) return z.get_ui();
  return z.get_str();
}

const std::string& input(const RunConfig& c, std::size_t i) {
  if (c.inputs.size() <= i) throw DomainError(c.command + " needs " + std::to_string(i + 1) + " input file(s)");
  return c.inputs[i];
}

io::ParsedHypergraph load_hypergraph(const RunConfig& c, Report& r) {
  auto parsed = io::read_hypergraph(input(c, 0), c.directed);
  for (const auto& w : parsed.warnings) r.warnings.push_back(w);
  return parsed;
}

// Calls f(field) with the configured field.
template <class Fn>
auto with_field(const RunConfig& c, Fn&& f) {
  if (c.field == "Q" || c.field == "q") return f(RationalField{});
  return f(PrimeField(static_cast<std::uint32_t>(std::stoul(c.field))));
}

// Reports a failed check with the smallest failing sub-hypergraph found by
// greedy edge removal.
template <EdgeOrder O>
void fail_with_counterexample(Report& r, const BasicHypergraph<O>& h,
                              const std::function<bool(const BasicHypergraph<O>&)>& fails) {
  r.exit_code = kCheckFailed;
  r.results["counterexample"] = io::hypergraph_to_json(checks::shrink_edges(h, fails));
}

template <EdgeOrder O>
void cmd_closure(const BasicHypergraph<O>& h, Report& r) {
  r.results["closure"] = io::hypergraph_to_json(delta_closure(h));
  r.results["lower"] = io::hypergraph_to_json(lower_associated(h));
  r.results["is_simplicial"] = is_simplicial(h);
}

template <EdgeOrder O>
void cmd_homology(const RunConfig& c, const BasicHypergraph<O>& h, Report& r) {
  with_field(c, [&](const auto& field) {
    const auto ec = embedded_complexes(field, h);
    const ChainComplex<std::decay_t<decltype(field)>>* cx = nullptr;
    if (c.kind == "inf") cx = &ec.inf.complex;
    if (c.kind == "sup") cx = &ec.sup.complex;
    if (c.kind == "ambient") cx = &ec.ambient.complex;
    if (!cx) throw DomainError("--kind must be inf, sup or ambient for homology");
    r.results["kind"] = c.kind;
    r.results["field"] = field.name();
    r.results["dims"] = cx->dims();
    r.results["betti"] = betti_object(betti(*cx));
    return 0;
  });
}

template <EdgeOrder O>
void cmd_quasi_check(const RunConfig& c, const BasicHypergraph<O>& h, Report& r) {
  with_field(c, [&](const auto& field) {
    const auto q = verify_quasi_iso_theta(field, h);
    r.results["field"] = field.name();
    r.results["betti_inf"] = betti_object(q.betti_inf);
    r.results["betti_sup"] = betti_object(q.betti_sup);
    r.results["induced_ranks"] = q.induced_ranks;
    r.results["is_iso"] = q.is_iso;
    if (!q.is_iso) {
      fail_with_counterexample<O>(r, h, [&](const auto& g) { return !verify_quasi_iso_theta(field, g).is_iso; });
    }
    return 0;
  });
}

template <EdgeOrder O>
void cmd_four_term(const RunConfig& c, const BasicHypergraph<O>& h, Report& r) {
  with_field(c, [&](const auto& field) {
    auto broken = [&](const BasicHypergraph<O>& g) {
      const auto f = four_term_sequence(field, g);
      const bool onto = std::all_of(f.surjective.begin(), f.surjective.end(), [](bool b) { return b; });
      return !onto || f.stage_dims.at(1) != f.chain_sup_dims || f.stage_dims.at(2) != f.chain_inf_dims ||
             (is_simplicial(g) && !f.all_identity);
    };
    const auto f = four_term_sequence(field, h);
    r.results["field"] = field.name();
    r.results["stage_dims"] = f.stage_dims;
    r.results["surjective"] = f.surjective;
    r.results["chain_sup_dims"] = f.chain_sup_dims;
    r.results["chain_inf_dims"] = f.chain_inf_dims;
    r.results["all_identity"] = f.all_identity;
    if (broken(h)) fail_with_counterexample<O>(r, h, broken);
    return 0;
  });
}

template <EdgeOrder O>
void cmd_quotient_check(const RunConfig& c, const BasicHypergraph<O>& h, Report& r) {
  const std::size_t top = c.max_degree.value_or(h.max_cardinality() == 0 ? 0 : h.max_cardinality() - 1);
  with_field(c, [&](const auto& field) {
    auto run_check = [&](const BasicHypergraph<O>& g) {
      return verify_quotient_quasi_iso(field, g, h.vertices(), top, c.max_ambient);
    };
    const auto q = run_check(h);
    r.results["field"] = field.name();
    r.results["max_degree"] = top;
    r.results["betti_mod_inf"] = betti_object(q.betti_mod_inf);
    r.results["betti_mod_sup"] = betti_object(q.betti_mod_sup);
    r.results["induced_ranks"] = q.induced_ranks;
    r.results["surjective"] = q.surjective;
    r.results["is_iso"] = q.is_iso;
    if (!q.is_iso || !q.surjective) {
      fail_with_counterexample<O>(r, h, [&](const auto& g) {
        const auto x = run_check(g);
        return !x.is_iso || !x.surjective;
      });
    }
    return 0;
  });
}

template <EdgeOrder O>
void cmd_aut(const RunConfig& c, const BasicHypergraph<O>& h, Report& r) {
  const auto a = aut_group(h, c.max_vertices);
  r.results["homeo_order"] = a.homeo_order;
  r.results["stab_order"] = a.stab_order;
  r.results["aut_order"] = a.aut_order;
  json gens = json::array();
  for (const auto& g : a.aut.generators()) gens.push_back(edge_cycles_to_string(h, g));
  r.results["aut_generators"] = gens;
  r.results["stab_normal"] = a.stab_normal;
  r.results["faithful"] = a.faithful;
  r.results["order_identity"] = a.order_identity;
  if (!a.ok()) r.exit_code = kCheckFailed;
}

void cmd_persist(const RunConfig& c, Report& r) {
  const auto points = io::read_point_sample(input(c, 0));
  if (c.kind != "inf" && c.kind != "sup") throw DomainError("--kind must be inf or sup for persist");
  const auto kind = c.kind == "inf" ? EmbeddedKind::inf : EmbeddedKind::sup;
  const bool all_pairs = c.all_pairs || !c.barcode_path.empty();
  const auto steps = build_filtration(points, c.n_max);
  const auto table = persistent_betti(steps, kind, all_pairs);

  json js = json::array();
  for (std::size_t i = 0; i < steps.size(); ++i) {
    js.push_back({{"step", i},
                  {"lower", steps[i].lower},
                  {"upper", radius(steps[i].upper)},
                  {"representative", steps[i].representative},
                  {"edges", steps[i].hypergraph.size()}});
  }
  json entries = json::array();
  std::string csv = "degree,r_i,r_j,beta_i,beta_j,rank\n";
  for (const auto& e : table.entries) {
    entries.push_back({{"degree", e.degree},
                       {"i", e.from},
                       {"j", e.to},
                       {"r_i", radius(e.r_from)},
                       {"r_j", radius(e.r_to)},
                       {"beta_i", e.betti_from},
                       {"beta_j", e.betti_to},
                       {"rank", e.rank}});
    csv += std::to_string(e.degree) + "," + csv_radius(e.r_from) + "," + csv_radius(e.r_to) + "," +
           std::to_string(e.betti_from) + "," + std::to_string(e.betti_to) + "," + std::to_string(e.rank) + "\n";
  }
  r.results["kind"] = c.kind;
  r.results["n_max"] = c.n_max;
  r.results["steps"] = js;
  r.results["table"] = entries;
  if (!c.table_path.empty()) {
    std::ofstream out(c.table_path);
    if (!out) throw DomainError("cannot write " + c.table_path);
    out << csv;
  }
  if (all_pairs) {
    json bars = json::array();
    for (const auto& b : barcode(table, steps)) {
      bars.push_back({{"degree", b.degree},
                      {"birth_step", b.birth_step},
                      {"death_step", b.death_step ? json(*b.death_step) : json(nullptr)},
                      {"birth_radius", radius(b.birth_radius)},
                      {"death_radius", b.death_radius ? radius(*b.death_radius) : json(nullptr)},
                      {"multiplicity", b.multiplicity}});
    }
    r.results["barcode"] = bars;
    if (!c.barcode_path.empty()) {
      std::ofstream out(c.barcode_path);
      if (!out) throw DomainError("cannot write " + c.barcode_path);
      out << bars.dump(2) << "\n";
    }
  }
}

void cmd_isom(const RunConfig& c, Report& r) {
  const auto points = io::read_point_sample(input(c, 0));
  const auto g = isom_group(points, c.max_vertices);
  r.results["isom_order"] = g.order();
  json gens = json::array();
  for (const auto& p : g.generators()) gens.push_back(p.image());
  r.results["isom_generators"] = gens;
  if (c.inputs.size() < 2) return;
  auto parsed = io::read_hypergraph(c.inputs[1]);
  for (const auto& w : parsed.warnings) r.warnings.push_back(w);
  if (!std::holds_alternative<Hypergraph>(parsed.graph)) throw DomainError("isom needs an undirected hypergraph");
  const auto a = aut_isom(std::get<Hypergraph>(parsed.graph), points, c.max_vertices);
  r.results["isom_homeo_order"] = a.isom_homeo_order;
  r.results["isom_stab_order"] = a.isom_stab_order;
  r.results["aut_order"] = a.aut_order;
  r.results["normal"] = a.normal;
  if (!a.normal) r.exit_code = kCheckFailed;
}

SpaceKind parse_space(const std::string& s) {
  if (s == "surface") return SpaceKind::surface;
  if (s == "euclidean") return SpaceKind::euclidean;
  if (s == "sphere") return SpaceKind::sphere;
  if (s == "rp") return SpaceKind::real_projective;
  if (s == "rp-x-euclidean") return SpaceKind::real_projective_times_euclidean;
  throw DomainError("unknown --space " + s + " (surface|euclidean|sphere|rp|rp-x-euclidean)");
}

void cmd_bundle_order(const RunConfig& c, Report& r) {
  const SpaceDescriptor s{parse_space(c.space), c.genus, c.m, c.k, c.n_embed};
  const auto b = order_bound(s, c.n);
  r.results["space"] = c.space;
  r.results["n"] = c.n;
  r.results["divides"] = mpz_json(b.divides);
  for (const auto& w : b.warnings) r.warnings.push_back(w);
}

void cmd_selftest(const RunConfig& c, Report& r) {
  json criteria = json::array();
  bool all = true;
  for (const auto& x : checks::run_all(c.seed)) {
    criteria.push_back({{"id", x.id}, {"name", x.name}, {"passed", x.passed}, {"detail", x.detail}});
    all = all && x.passed;
  }
  r.results["seed"] = c.seed;
  r.results["criteria"] = criteria;
  r.results["passed"] = all;
  if (!all) r.exit_code = kCheckFailed;
}

template <EdgeOrder O>
void dispatch_hypergraph(const RunConfig& c, const BasicHypergraph<O>& h, Report& r) {
  r.results["directed"] = O == EdgeOrder::ordered;
  if (c.command == "closure") return cmd_closure(h, r);
  if (c.command == "homology") return cmd_homology(c, h, r);
  if (c.command == "quasi-check") return cmd_quasi_check(c, h, r);
  if (c.command == "four-term") return cmd_four_term(c, h, r);
  if (c.command == "quotient-check") return cmd_quotient_check(c, h, r);
  if (c.command == "aut") return cmd_aut(c, h, r);
}

std::optional<std::size_t> env_size(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) return std::nullopt;
  try {
    return std::stoul(v);
  } catch (const std::exception&) {
    throw DomainError(std::string(name) + " must be a positive integer");
  }
}

}  // namespace

void RunConfig::apply_environment() {
  if (auto v = env_size("EMBHOM_MAX_VERTICES")) max_vertices = *v;
  if (auto v = env_size("EMBHOM_MAX_AMBIENT")) max_ambient = *v;
}

void RunConfig::validate() const {
  if (max_vertices == 0 || max_ambient == 0) throw DomainError("caps must be positive");
  if (field != "Q" && field != "q") {
    unsigned long p = 0;
    try {
      p = std::stoul(field);
    } catch (const std::exception&) {
      throw DomainError("--field must be Q or a prime, got " + field);
    }
    if (p > 0xffffffffUL || !PrimeField::is_prime(static_cast<std::uint32_t>(p))) {
      throw DomainError("--field " + field + " is not a prime");
    }
  }
  if (n_max == 0) throw DomainError("--n-max must be positive");
}

json Report::to_json() const {
  return {{"schema", kReportSchema},
          {"command", command},
          {"results", results},
          {"warnings", warnings},
          {"timing_ms", timing_ms}};
}

Report run(const RunConfig& c) {
  c.validate();
  const auto start = std::chrono::steady_clock::now();
  Report r;
  r.command = c.command;
  r.results = json::object();
  static const std::set<std::string> kHypergraphCommands = {"closure",   "homology",       "quasi-check",
                                                            "four-term", "quotient-check", "aut"};
  if (kHypergraphCommands.contains(c.command)) {
    const auto parsed = load_hypergraph(c, r);
    std::visit([&](const auto& h) { dispatch_hypergraph(c, h, r); }, parsed.graph);
  } else if (c.command == "persist") {
    cmd_persist(c, r);
  } else if (c.command == "isom") {
    cmd_isom(c, r);
  } else if (c.command == "bundle-order") {
    cmd_bundle_order(c, r);
  } else if (c.command == "embed-bound") {
    r.results["bound"] = embedding_dimension_bound(c.t, c.k);
  } else if (c.command == "selftest") {
    cmd_selftest(c, r);
  } else {
    throw DomainError("unknown command " + c.command);
  }
  r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

void emit_report(const Report& report, const std::string& path) {
  const std::string text = report.to_json().dump(2) + "\n";
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write " + path);
  out << text;
}

}  // namespace embhom::cli
