// Command-line front end: validate, combine and transform set documents,
// replay the worked examples, estimate family volumes, check refined
// components, work with neutrosophic matrices and run decision partitions.
//
// Exit status: 0 when every check passes, 1 when a check fails or an input
// violates its family constraint, 2 on usage or parse errors.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "neutro/neutro.hpp"

namespace {

using nlohmann::json;
using namespace neutro;

struct Globals {
  double tolerance = kPrintedTolerance;
  int round = -1;
  std::uint64_t seed = 42;
  std::string format = "table";
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

// FNV-1a, 64 bit.
class Digest {
 public:
  void add(std::string_view bytes) {
    for (unsigned char c : bytes) {
      h_ ^= c;
      h_ *= 0x100000001b3ULL;
    }
    h_ ^= 0xff;  // field separator
    h_ *= 0x100000001b3ULL;
  }
  std::string hex() const {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h_;
    return os.str();
  }

 private:
  std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

class Report {
 public:
  Report(const Globals& g, std::string command) : g_(g), command_(command) {
    digest_.add(command);
  }

  void add_input(std::string_view bytes) { digest_.add(bytes); }

  std::string num(double v) const {
    v = rounded(v);
    if (g_.round >= 0) {
      std::ostringstream os;
      os << std::fixed << std::setprecision(g_.round) << v;
      return os.str();
    }
    char buf[32];
    auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
  }

  json jnum(double v) const { return rounded(v); }

  json jnums(const std::vector<double>& xs) const {
    json a = json::array();
    for (double x : xs) a.push_back(jnum(x));
    return a;
  }

  std::string triple(const Triplet& x) const {
    return "(" + num(x.t) + ", " + num(x.i) + ", " + num(x.f) + ")";
  }

  std::string list(const std::vector<double>& xs) const {
    std::string s = "(";
    for (std::size_t k = 0; k < xs.size(); ++k) {
      if (k) s += ", ";
      s += num(xs[k]);
    }
    return s + ")";
  }

  json jtriple(const Triplet& x) const {
    return jnums({x.t.value(), x.i.value(), x.f.value()});
  }

  void line(std::string s) { lines_.push_back(std::move(s)); }
  json& outputs() { return outputs_; }

  void check(const std::string& name, bool passed,
             const std::vector<double>& expected = {},
             const std::vector<double>& actual = {}, double tol = 0.0) {
    json c{{"name", name}, {"passed", passed}};
    if (!expected.empty() || !actual.empty()) {
      c["expected"] = jnums(expected);
      c["actual"] = jnums(actual);
      c["tolerance"] = tol;
    }
    checks_.push_back(std::move(c));
    all_passed_ = all_passed_ && passed;
  }

  bool passed() const { return all_passed_; }

  void emit(std::ostream& os) const {
    if (g_.format == "json") {
      json j;
      j["command"] = command_;
      j["inputs_digest"] = digest_.hex();
      j["tolerances"] = {{"printed", g_.tolerance}, {"epsilon", kEpsilon}};
      j["outputs"] = outputs_;
      j["checks"] = checks_;
      j["passed"] = all_passed_;
      os << j.dump(2) << "\n";
      return;
    }
    os << "command: " << command_ << "\n";
    os << "inputs digest: " << digest_.hex() << "\n";
    os << "tolerance: " << g_.tolerance << " (printed values), " << kEpsilon
       << " (exact values)\n";
    for (const auto& l : lines_) os << l << "\n";
    for (const auto& c : checks_) {
      os << (c["passed"].get<bool>() ? "PASS " : "FAIL ")
         << c["name"].get<std::string>();
      if (c.contains("expected")) {
        os << "  expected " << c["expected"].dump() << " got "
           << c["actual"].dump();
      }
      os << "\n";
    }
    if (!checks_.empty()) {
      os << (all_passed_ ? "all checks passed" : "some checks FAILED") << "\n";
    }
  }

 private:
  double rounded(double v) const {
    if (g_.round >= 0) {
      const double s = std::pow(10.0, g_.round);
      v = std::round(v * s) / s;
    }
    return v == 0.0 ? 0.0 : v;
  }

  const Globals& g_;
  std::string command_;
  Digest digest_;
  json outputs_ = json::object();
  json checks_ = json::array();
  std::vector<std::string> lines_;
  bool all_passed_ = true;
};

FamilySpec family_from_flags(const std::string& kind, double exponent) {
  const auto k = parse_family_kind(kind);
  return FamilySpec(k, exponent);
}

NormPair parse_norms(const std::string& s) {
  if (s == "minmax") return NormPair::min_max();
  if (s == "product") return NormPair::product();
  throw UsageError("unknown norm pair '" + s + "' (minmax or product)");
}

// --- validate ---------------------------------------------------------------

struct ValidateArgs {
  std::string file;
  std::string family;
  double exponent = 1.0;
};

int cmd_validate(const ValidateArgs& a, Report& rep) {
  const std::string text = read_file(a.file);
  rep.add_input(text);
  const auto doc = parse_document(text);
  const FamilySpec fam =
      a.family.empty() ? doc.family : family_from_flags(a.family, a.exponent);
  const auto reports = validate_document(doc, fam);

  rep.outputs()["family"] = fam.name();
  json elems = json::array();
  rep.line("family: " + fam.name());
  for (std::size_t k = 0; k < reports.size(); ++k) {
    const auto& r = reports[k];
    elems.push_back({{"element", doc.universe[k]},
                     {"valid", r.valid},
                     {"constraint_value", rep.jnum(r.constraint_value)},
                     {"bound", r.bound},
                     {"diagnostics", r.diagnostics}});
    rep.line(doc.universe[k] + " " + rep.list(doc.components[k]) + ": " +
             r.diagnostics);
    rep.check(doc.universe[k] + " valid under " + fam.name(), r.valid);
  }
  rep.outputs()["elements"] = elems;
  return rep.passed() ? 0 : 1;
}

// --- op ---------------------------------------------------------------------

struct OpArgs {
  std::string file_a;
  std::string file_b;
  std::string op = "and";
  std::string system = "NS";
  std::string norms = "minmax";
  std::string overflow = "result";
  std::string out;
};

int cmd_op(const OpArgs& a, const Globals& g, Report& rep) {
  const auto op = parse_set_op(a.op);
  OperatorSystem sys;
  sys.system = parse_system(a.system);
  sys.norms = parse_norms(a.norms);
  if (a.overflow == "result") {
    sys.overflow = OverflowNumerator::Result;
  } else if (a.overflow == "lesser-i") {
    sys.overflow = OverflowNumerator::LesserI;
  } else {
    throw UsageError("unknown overflow reading '" + a.overflow + "'");
  }

  const std::string ta = read_file(a.file_a);
  rep.add_input(ta);
  const auto set_a = to_labeled_set(load_document(ta));
  LabeledSet result;
  std::optional<LabeledSet> set_b;
  if (op == SetOp::Not) {
    if (!a.file_b.empty()) throw UsageError("'not' takes a single file");
    result = setwise_negate(set_a, sys);
  } else {
    if (a.file_b.empty()) throw UsageError("'" + a.op + "' needs two files");
    const std::string tb = read_file(a.file_b);
    rep.add_input(tb);
    set_b = to_labeled_set(load_document(tb));
    result = setwise(set_a, *set_b, op, sys);
  }

  rep.line("operator: " + a.op + " under " +
           std::string(to_string(sys.system)) + " (" + a.norms + ")");
  json rows = json::array();
  for (std::size_t k = 0; k < result.size(); ++k) {
    std::string l = result.name(k) + ": " + rep.triple(set_a[k]);
    json row{{"element", result.name(k)}, {"a", rep.jtriple(set_a[k])}};
    if (set_b) {
      l += "  " + a.op + "  " + rep.triple((*set_b)[k]);
      row["b"] = rep.jtriple((*set_b)[k]);
    }
    l += "  ->  " + rep.triple(result[k]);
    row["result"] = rep.jtriple(result[k]);
    rows.push_back(row);
    rep.line(l);
  }
  rep.outputs()["table"] = rows;
  const auto doc = to_document(result);
  if (!a.out.empty()) {
    write_file(a.out, emit_document(doc));
    rep.outputs()["written"] = a.out;
  } else {
    rep.outputs()["document"] = to_json(doc);
    if (g.format != "json") rep.line(emit_document(doc));
  }
  return 0;
}

// --- transform --------------------------------------------------------------

struct TransformArgs {
  std::string file;
  std::string kind = "sup";
  std::string out;
};

int cmd_transform(const TransformArgs& a, const Globals& g, Report& rep) {
  const std::string text = read_file(a.file);
  rep.add_input(text);
  const auto set = to_labeled_set(load_document(text));
  LabeledSet result;
  if (a.kind == "sup") {
    const auto t = sup_transform(set);
    result = t.set;
    rep.outputs()["denominator"] = rep.jnum(t.denominator);
    rep.outputs()["refusals"] = rep.jnums(t.refusals);
    rep.line("sum of suprema: " + rep.num(t.denominator));
    for (std::size_t k = 0; k < result.size(); ++k) {
      rep.line(result.name(k) + ": " + rep.triple(set[k]) + " -> " +
               rep.triple(result[k]) + "  refusal " + rep.num(t.refusals[k]));
    }
  } else if (a.kind == "normalize") {
    result = normalize_elementwise(set);
    for (std::size_t k = 0; k < result.size(); ++k) {
      rep.line(result.name(k) + ": " + rep.triple(set[k]) + " -> " +
               rep.triple(result[k]));
    }
  } else if (a.kind == "paradox") {
    json rows = json::array();
    for (std::size_t k = 0; k < set.size(); ++k) {
      const auto p = paradox_check(set[k]);
      json row{{"element", set.name(k)},
               {"is_paradox", p.is_paradox},
               {"ns_valid", p.ns_valid},
               {"iifs_valid", p.iifs_valid},
               {"normalized_is_paradox", p.normalized_is_paradox}};
      std::string l = set.name(k) + ": paradox " +
                      (p.is_paradox ? "yes" : "no") + ", NS " +
                      (p.ns_valid ? "valid" : "invalid") + ", IIFS " +
                      (p.iifs_valid ? "valid" : "invalid");
      if (p.normalized) {
        row["normalized"] = rep.jtriple(*p.normalized);
        l += ", normalized " + rep.triple(*p.normalized);
      }
      rows.push_back(row);
      rep.line(l);
    }
    rep.outputs()["elements"] = rows;
    return 0;
  } else {
    throw UsageError("unknown transform '" + a.kind +
                     "' (sup, normalize or paradox)");
  }
  const auto doc = to_document(result);
  if (!a.out.empty()) {
    write_file(a.out, emit_document(doc));
    rep.outputs()["written"] = a.out;
  } else {
    rep.outputs()["document"] = to_json(doc);
    if (g.format != "json") rep.line(emit_document(doc));
  }
  return 0;
}

// --- demo -------------------------------------------------------------------

struct DemoArgs {
  std::vector<std::string> names;
  bool all = false;
  bool list = false;
  std::uint64_t samples = 100000;
};

int cmd_demo(const DemoArgs& a, const Globals& g, Report& rep) {
  if (a.list) {
    for (const auto& n : exhibits::names()) rep.line(n);
    rep.outputs()["exhibits"] = exhibits::names();
    return 0;
  }
  std::vector<std::string> names = a.names;
  if (a.all) {
    if (!names.empty()) throw UsageError("give exhibit names or --all, not both");
    names = exhibits::names();
  }
  if (names.empty()) throw UsageError("name an exhibit or pass --all");

  exhibits::Options o;
  o.tolerance = g.tolerance;
  o.seed = g.seed;
  o.samples = a.samples;
  json out = json::array();
  for (const auto& n : names) {
    const auto r = exhibits::run(n, o);
    rep.line("== " + r.name + ": " + r.title);
    json checks = json::array();
    for (const auto& c : r.checks) {
      rep.check(r.name + ": " + c.name, c.passed, c.expected, c.actual,
                c.tolerance);
    }
    out.push_back({{"name", r.name}, {"passed", r.passed()}});
  }
  rep.outputs()["exhibits"] = out;
  return rep.passed() ? 0 : 1;
}

// --- volume -----------------------------------------------------------------

struct VolumeArgs {
  std::string family = "SFS";
  double exponent = 1.0;
  std::uint64_t samples = 1000000;
};

int cmd_volume(const VolumeArgs& a, const Globals& g, Report& rep) {
  const auto fam = family_from_flags(a.family, a.exponent);
  const auto e = estimate_family_volume(fam, a.samples, g.seed);
  rep.outputs()["family"] = fam.name();
  rep.outputs()["samples"] = e.samples;
  rep.outputs()["seed"] = g.seed;
  rep.outputs()["dimension"] = e.dimension;
  rep.outputs()["estimate"] = rep.jnum(e.estimate);
  rep.outputs()["std_error"] = rep.jnum(e.std_error);
  rep.line(fam.name() + " over the unit " +
           (e.dimension == 2 ? "square" : e.dimension == 1 ? "interval"
                                                            : "cube"));
  rep.line("estimate " + rep.num(e.estimate) + " +/- " +
           rep.num(e.std_error) + " (" + std::to_string(e.samples) +
           " samples, seed " + std::to_string(g.seed) + ")");
  if (auto exact = analytic_family_volume(fam)) {
    rep.outputs()["analytic"] = rep.jnum(*exact);
    rep.line("closed form " + rep.num(*exact));
    if (e.std_error > 0.0) {
      const double z = (e.estimate - *exact) / e.std_error;
      rep.outputs()["z_score"] = rep.jnum(z);
      rep.line("z-score " + rep.num(z));
    }
    rep.check("estimate within 3 standard errors of the closed form",
              std::fabs(e.estimate - *exact) <= 3.0 * e.std_error + kEpsilon,
              {*exact}, {e.estimate}, 3.0 * e.std_error);
  }
  return rep.passed() ? 0 : 1;
}

// --- refined ----------------------------------------------------------------

struct RefinedArgs {
  std::string family = "RNS";
  double exponent = 1.0;
  std::vector<double> t, i, f;
  bool degenerate = false;
  std::vector<double> split;
  std::vector<std::size_t> arity;
};

int cmd_refined(const RefinedArgs& a, Report& rep) {
  if (!a.split.empty()) {
    if (a.split.size() != 3 || a.arity.size() != 3) {
      throw UsageError("--split takes T,I,F and --arity takes p,r,s");
    }
    const Triplet x(a.split[0], a.split[1], a.split[2]);
    const auto c = refine(x, {a.arity[0], a.arity[1], a.arity[2]});
    const auto back = coarsen(c);
    rep.line("refined T " + rep.list(c.ts) + "  I " + rep.list(c.is) +
             "  F " + rep.list(c.fs));
    rep.line("coarsened " + rep.triple(back));
    rep.outputs()["t"] = rep.jnums(c.ts);
    rep.outputs()["i"] = rep.jnums(c.is);
    rep.outputs()["f"] = rep.jnums(c.fs);
    rep.outputs()["coarsened"] = rep.jtriple(back);
    rep.check("coarsen(refine(x)) = x", approx_equal(back, x),
              {x.t, x.i, x.f}, {back.t, back.i, back.f}, kEpsilon);
    return rep.passed() ? 0 : 1;
  }

  const RefinedFamilySpec fam(parse_refined_kind(a.family), a.exponent);
  const auto policy =
      a.degenerate ? ArityPolicy::AllowDegenerate : ArityPolicy::Strict;
  const RefinedComponents c{a.t, a.i, a.f};
  const auto r = validate_refined(c, fam, policy);
  rep.outputs()["family"] = fam.name();
  rep.outputs()["valid"] = r.valid;
  rep.outputs()["constraint_value"] = rep.jnum(r.constraint_value);
  rep.outputs()["bound"] = r.bound;
  rep.line(r.diagnostics);
  if (r.valid) {
    if (fam.kind() == RefinedKind::RPyFS || fam.kind() == RefinedKind::RQROFS) {
      const double h = refined_hesitancy(c, fam, policy);
      rep.outputs()["hesitancy"] = rep.jnum(h);
      rep.line("hesitancy " + rep.num(h));
    } else if (fam.kind() == RefinedKind::RSFS ||
               fam.kind() == RefinedKind::RIIFS) {
      const double rf = refined_refusal(c, fam, policy);
      rep.outputs()["refusal"] = rep.jnum(rf);
      rep.line("refusal " + rep.num(rf));
    }
  }
  rep.check("components valid under " + fam.name(), r.valid);
  return rep.passed() ? 0 : 1;
}

// --- matrix -----------------------------------------------------------------

struct MatrixArgs {
  std::string file;
  std::string kind;
  std::string mul;
  std::string add;
  long long power = 0;
  bool has_power = false;
  std::vector<std::string> path;
  std::string out;
};

Triplet parse_edge(const std::string& s) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    double x = 0.0;
    auto r = std::from_chars(part.data(), part.data() + part.size(), x);
    if (r.ec != std::errc() || r.ptr != part.data() + part.size()) {
      throw UsageError("edge '" + s + "' is not t,i,f");
    }
    v.push_back(x);
  }
  if (v.size() != 3) throw UsageError("edge '" + s + "' is not t,i,f");
  return Triplet(v[0], v[1], v[2]);
}

int cmd_matrix(const MatrixArgs& a, const Globals& g, Report& rep) {
  if (!a.path.empty()) {
    std::vector<Triplet> edges;
    for (const auto& e : a.path) edges.push_back(parse_edge(e));
    const auto v = path_influence(edges);
    rep.outputs()["path_value"] = rep.jtriple(v);
    rep.line("path value " + rep.triple(v));
    if (a.file.empty()) return 0;
  }
  if (a.file.empty()) throw UsageError("give a grid file or --path");

  const std::string text = read_file(a.file);
  rep.add_input(text);
  NeutroMatrix m = parse_grid(text);
  if (!a.kind.empty()) {
    const auto r = adjacency_validate(m, parse_adjacency_kind(a.kind));
    rep.outputs()["adjacency"] = {
        {"size", r.size},
        {"edges", r.edges},
        {"indeterminate", r.indeterminate},
        {"indeterminate_pairs", r.symmetric_indeterminate_pairs},
        {"symmetric", r.symmetric}};
    rep.line(a.kind + " " + std::to_string(r.size) + "x" +
             std::to_string(r.size) + ": " + std::to_string(r.edges) +
             " determinate links, " + std::to_string(r.indeterminate) +
             " indeterminate entries (" +
             std::to_string(r.symmetric_indeterminate_pairs) +
             " symmetric pairs)");
    rep.check("adjacency alphabet", true);
  }
  if (!a.add.empty()) {
    const std::string t = read_file(a.add);
    rep.add_input(t);
    m = m + parse_grid(t);
  }
  if (!a.mul.empty()) {
    const std::string t = read_file(a.mul);
    rep.add_input(t);
    m = m * parse_grid(t);
  }
  if (a.has_power) {
    if (!m.square()) throw UsageError("only square matrices have powers");
    if (a.power < 1) throw UsageError("matrix power must be >= 1");
    NeutroMatrix p = m;
    for (long long k = 1; k < a.power; ++k) p = p * m;
    m = p;
  }
  const std::string grid = emit_grid(m);
  if (!a.out.empty()) {
    write_file(a.out, grid);
    rep.outputs()["written"] = a.out;
  } else {
    rep.outputs()["grid"] = grid;
    if (g.format != "json") rep.line(grid.substr(0, grid.size() - 1));
  }
  return rep.passed() ? 0 : 1;
}

// --- decide -----------------------------------------------------------------

struct DecideArgs {
  std::vector<double> scores;
  std::optional<double> alpha, beta;
  std::vector<double> cuts;
  std::vector<std::size_t> arity;
  std::vector<std::string> areas;
  std::vector<std::string> accept, neutral, reject;
  std::optional<double> amount;
  double norm = 1.0;
  std::vector<double> bounds{-1.0, 2.0};
};

int cmd_decide(const DecideArgs& a, Report& rep) {
  int modes = (a.alpha || a.beta) + !a.cuts.empty() + !a.areas.empty() +
              a.amount.has_value();
  if (modes != 1) {
    throw UsageError(
        "choose one of --alpha/--beta, --cuts, --areas or --amount");
  }

  if (a.amount) {
    if (a.bounds.size() != 2) throw UsageError("--bounds takes under,over");
    const double d = offset_degree(*a.amount, a.norm);
    const auto r = validate_offset({d, 0.0, 0.0}, {a.bounds[0], a.bounds[1]});
    rep.outputs()["degree"] = rep.jnum(d);
    rep.outputs()["class"] = std::string(to_string(r.cls));
    rep.outputs()["within_bounds"] = r.valid;
    rep.line("degree " + rep.num(d) + " (" + std::string(to_string(r.cls)) +
             ")");
    rep.check("degree within offset bounds", r.valid);
    return rep.passed() ? 0 : 1;
  }

  if (!a.areas.empty()) {
    std::vector<LabeledArea> areas;
    for (const auto& s : a.areas) {
      const auto eq = s.find('=');
      if (eq == std::string::npos) throw UsageError("area '" + s + "' is not label=size");
      double size = 0.0;
      const std::string v = s.substr(eq + 1);
      auto r = std::from_chars(v.data(), v.data() + v.size(), size);
      if (r.ec != std::errc() || r.ptr != v.data() + v.size()) {
        throw UsageError("area '" + s + "' has a malformed size");
      }
      areas.push_back({s.substr(0, eq), size});
    }
    const auto p = neutrosophify(areas, {a.accept, a.neutral, a.reject});
    rep.outputs()["partition"] = rep.jtriple(p.as_triplet());
    rep.outputs()["dependence"] =
        p.dependence == Dependence::SumToOne ? "sum-to-one" : "free";
    rep.line("(T, I, F) = " + rep.triple(p.as_triplet()) + ", " +
             (p.dependence == Dependence::SumToOne ? "sums to 1"
                                                   : "groups do not cover"));
    return 0;
  }

  if (a.alpha || a.beta) {
    if (!a.alpha || !a.beta) throw UsageError("give both --alpha and --beta");
    const auto r = three_ways(a.scores, *a.alpha, *a.beta);
    json labels = json::array();
    for (std::size_t k = 0; k < r.labels.size(); ++k) {
      labels.push_back(std::string(to_string(r.labels[k])));
      rep.line(rep.num(a.scores[k]) + " -> " +
               std::string(to_string(r.labels[k])));
    }
    rep.outputs()["labels"] = labels;
    rep.outputs()["partition"] = rep.jtriple(r.partition.as_triplet());
    rep.line("partition (accept, noncommit, reject) = " +
             rep.triple(r.partition.as_triplet()));
    return 0;
  }

  if (a.arity.size() != 3) throw UsageError("--arity takes p,r,s");
  const auto r = n_ways(a.scores, a.cuts, {a.arity[0], a.arity[1], a.arity[2]});
  json labels = json::array();
  for (std::size_t k = 0; k < r.labels.size(); ++k) {
    labels.push_back(
        {{"region", std::string(to_string(r.labels[k].region))},
         {"level", r.labels[k].level}});
    rep.line(rep.num(a.scores[k]) + " -> " + to_string(r.labels[k]));
  }
  rep.outputs()["labels"] = labels;
  rep.outputs()["accept_levels"] = rep.jnums(r.partition.accept_levels);
  rep.outputs()["noncommit_levels"] = rep.jnums(r.partition.noncommit_levels);
  rep.outputs()["reject_levels"] = rep.jnums(r.partition.reject_levels);
  rep.line("accept levels " + rep.list(r.partition.accept_levels) +
           ", noncommit levels " + rep.list(r.partition.noncommit_levels) +
           ", reject levels " + rep.list(r.partition.reject_levels));
  return 0;
}

std::string echo(int argc, char** argv) {
  std::string s;
  for (int k = 0; k < argc; ++k) {
    if (k) s += ' ';
    s += argv[k];
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Validated algebra for fuzzy, intuitionistic and neutrosophic "
               "set families"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--tolerance", g.tolerance,
                 "Tolerance against two-decimal published values")
      ->check(CLI::PositiveNumber);
  app.add_option("--round", g.round, "Decimals shown in reports (display only)")
      ->check(CLI::Range(0, 17));
  app.add_option("--seed", g.seed, "Sampler seed");
  app.add_option("--format", g.format, "Report format")
      ->check(CLI::IsMember({"json", "table"}));

  ValidateArgs va;
  auto* validate = app.add_subcommand("validate", "Check a set document");
  validate->add_option("file", va.file, "Document")->required();
  validate->add_option("--family", va.family,
                       "Family to check against (default: declared)");
  validate->add_option("--exponent", va.exponent, "q or n for QROFS/NHSFS/NHSNS");

  OpArgs oa;
  auto* op = app.add_subcommand("op", "Apply an operator to set documents");
  op->add_option("file_a", oa.file_a, "First operand")->required();
  op->add_option("file_b", oa.file_b, "Second operand");
  op->add_option("--op", oa.op, "and, or, implies, not")->required();
  op->add_option("--system", oa.system, "NS, IFS, IIFS, IIFS2");
  op->add_option("--norms", oa.norms, "minmax or product");
  op->add_option("--overflow", oa.overflow,
                 "IIFS conjunction rescaling: result or lesser-i");
  op->add_option("-o,--out", oa.out, "Write the result document here");

  TransformArgs ta;
  auto* transform = app.add_subcommand("transform", "Rescale a set document");
  transform->add_option("file", ta.file, "Document")->required();
  transform->add_option("--kind", ta.kind, "sup, normalize or paradox");
  transform->add_option("-o,--out", ta.out, "Write the result document here");

  DemoArgs da;
  auto* demo = app.add_subcommand("demo", "Replay worked examples");
  demo->add_option("names", da.names, "Exhibits to run");
  demo->add_flag("--all", da.all, "Run every exhibit");
  demo->add_flag("--list", da.list, "List exhibit names");
  demo->add_option("--samples", da.samples, "Samples for the geometry exhibit")
      ->check(CLI::PositiveNumber);

  VolumeArgs vo;
  auto* volume = app.add_subcommand("volume", "Estimate a family's volume");
  volume->add_option("--family", vo.family, "Family kind");
  volume->add_option("--exponent", vo.exponent, "q or n");
  volume->add_option("--samples", vo.samples, "Number of samples")
      ->check(CLI::PositiveNumber);

  RefinedArgs ra;
  auto* refined = app.add_subcommand("refined", "Check refined components");
  refined->add_option("--family", ra.family, "RFS, RIFS, RIIFS, RNS, ...");
  refined->add_option("--exponent", ra.exponent, "q or n");
  refined->add_option("--t", ra.t, "Truth sub-components")->delimiter(',');
  refined->add_option("--i", ra.i, "Indeterminacy sub-components")
      ->delimiter(',');
  refined->add_option("--f", ra.f, "Falsehood sub-components")->delimiter(',');
  refined->add_flag("--degenerate", ra.degenerate,
                    "Admit one sub-component per slot");
  refined->add_option("--split", ra.split, "Triplet T,I,F to refine")
      ->delimiter(',');
  refined->add_option("--arity", ra.arity, "p,r,s for --split")
      ->delimiter(',');

  MatrixArgs ma;
  auto* matrix = app.add_subcommand("matrix", "Neutrosophic matrices");
  matrix->add_option("file", ma.file, "Grid file");
  matrix->add_option("--adjacency", ma.kind, "Validate as graph or ncm");
  matrix->add_option("--mul", ma.mul, "Right-multiply by this grid");
  matrix->add_option("--add", ma.add, "Add this grid");
  auto* pow_opt = matrix->add_option("--power", ma.power, "Matrix power");
  matrix->add_option("--path", ma.path, "Edge values t,i,f along a path");
  matrix->add_option("-o,--out", ma.out, "Write the resulting grid here");

  DecideArgs de;
  auto* decide = app.add_subcommand("decide", "Decision partitions");
  decide->add_option("--scores", de.scores, "Element scores")->delimiter(',');
  decide->add_option("--alpha", de.alpha, "Accept threshold");
  decide->add_option("--beta", de.beta, "Reject threshold");
  decide->add_option("--cuts", de.cuts, "Ascending cut points")
      ->delimiter(',');
  decide->add_option("--arity", de.arity, "p,r,s")->delimiter(',');
  decide->add_option("--areas", de.areas, "label=size pairs")->delimiter(',');
  decide->add_option("--accept", de.accept, "Labels for <A>")->delimiter(',');
  decide->add_option("--neutral", de.neutral, "Labels for <neutA>")
      ->delimiter(',');
  decide->add_option("--reject", de.reject, "Labels for <antiA>")
      ->delimiter(',');
  decide->add_option("--amount", de.amount, "Off-set amount");
  decide->add_option("--norm", de.norm, "Off-set norm");
  decide->add_option("--bounds", de.bounds, "Off-set under,over")
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  ma.has_power = pow_opt->count() > 0;

  Report rep(g, echo(argc, argv));
  int code = 0;
  try {
    if (*validate) code = cmd_validate(va, rep);
    else if (*op) code = cmd_op(oa, g, rep);
    else if (*transform) code = cmd_transform(ta, g, rep);
    else if (*demo) code = cmd_demo(da, g, rep);
    else if (*volume) code = cmd_volume(vo, g, rep);
    else if (*refined) code = cmd_refined(ra, rep);
    else if (*matrix) code = cmd_matrix(ma, g, rep);
    else if (*decide) code = cmd_decide(de, rep);
  } catch (const ConstraintError& e) {
    std::cerr << "constraint violated: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  rep.emit(std::cout);
  return code;
}
