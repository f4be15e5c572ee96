#include "grady/cli_io.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <regex>

#include "grady/fitting.hpp"
#include "grady/g_theory.hpp"
#include "grady/parser.hpp"
#include "grady/truncation_oracle.hpp"

namespace grady {
namespace {

// ---------------------------------------------------------------------------
// Schema helpers

std::string at(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const json& field(const json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(at(path, key), "missing field");
  return *it;
}

void expect_object(const json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
}
void expect_array(const json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
}
std::string get_string(const json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path, "expected a string");
  return j.get<std::string>();
}
std::int64_t get_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
  return j.get<std::int64_t>();
}
std::size_t get_size(const json& j, const std::string& path) {
  auto v = get_int(j, path);
  if (v < 0) throw SchemaError(path, "expected a non-negative integer");
  return static_cast<std::size_t>(v);
}
std::vector<std::string> get_strings(const json& j, const std::string& path) {
  expect_array(j, path);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(get_string(j[i], at(path, i)));
  return out;
}

void reject_unknown(const json& obj, std::initializer_list<const char*> known, const std::string& path) {
  for (const auto& [key, value] : obj.items())
    if (std::none_of(known.begin(), known.end(), [&](const char* k) { return key == k; }))
      throw SchemaError(at(path, key), "unknown field");
}

// Calls fn with a ring over the job's field.
template <class Fn>
decltype(auto) with_ring(const std::string& field_name, const std::vector<std::string>& vars, Fn&& fn) {
  if (field_name == "Q") return fn(make_ring(Rationals{}, vars));
  static const std::regex prime(R"(F<?(\d+)>?)");
  std::smatch m;
  if (std::regex_match(field_name, m, prime)) {
    unsigned long p = 0;
    try {
      p = std::stoul(m[1].str());
    } catch (const std::exception&) {
      throw SchemaError("ring.field", "characteristic out of range");
    }
    if (p > 0x7fffffffUL) throw SchemaError("ring.field", "characteristic out of range");
    try {
      return fn(make_ring(PrimeField(static_cast<std::uint32_t>(p)), vars));
    } catch (const DomainError& e) {
      if (std::string(e.what()).find("prime") != std::string::npos) throw SchemaError("ring.field", e.what());
      throw;
    }
  }
  throw SchemaError("ring.field", "expected \"Q\" or \"F<p>\"");
}

std::string canonical_field(const std::string& name) {
  if (name == "Q") return name;
  std::string digits;
  for (char c : name)
    if (std::isdigit(static_cast<unsigned char>(c))) digits += c;
  return "F" + digits;
}

template <class F>
std::string canonical_poly(const std::string& text, const RingPtr<F>& ring, const std::string& path) {
  try {
    return parse_polynomial(text, ring).to_string();
  } catch (const ParseError& e) {
    throw SchemaError(path, e.what());
  }
}

Hdeg parse_degree(const json& j, const GradingGroup& group, const std::string& path) {
  expect_array(j, path);
  const std::size_t r = group.free_rank(), s = group.torsion().size();
  if (j.size() != r + s)
    throw SchemaError(path, "expected " + std::to_string(r + s) + " entries (free rank " + std::to_string(r) +
                                " plus " + std::to_string(s) + " torsion)");
  std::vector<std::int64_t> free, torsion;
  for (std::size_t i = 0; i < j.size(); ++i) (i < r ? free : torsion).push_back(get_int(j[i], at(path, i)));
  return group.element(std::move(free), std::move(torsion));
}

json degree_json(const Hdeg& d) {
  json a = json::array();
  for (auto v : d.free) a.push_back(v);
  for (auto v : d.torsion) a.push_back(v);
  return a;
}

GradingSpec preset(const std::string& name, std::size_t n, const std::string& path) {
  Grading g;
  if (name == "fine") g = Grading::fine(n);
  else if (name == "standard") g = Grading::standard(n);
  else if (name == "trivial") g = Grading::trivial(n);
  else throw SchemaError(path, "unknown grading preset '" + name + "'");
  return {g.group.free_rank(), g.group.torsion(), g.degrees};
}

GradingSpec parse_grading(const json& j, std::size_t n) {
  const std::string path = "grading";
  if (j.is_string()) return preset(j.get<std::string>(), n, path);
  expect_object(j, path);
  reject_unknown(j, {"free_rank", "torsion", "degrees"}, path);
  GradingSpec spec;
  spec.free_rank = get_size(field(j, "free_rank", path), at(path, "free_rank"));
  if (j.contains("torsion")) {
    const auto& t = j["torsion"];
    expect_array(t, at(path, "torsion"));
    for (std::size_t i = 0; i < t.size(); ++i) {
      auto m = get_int(t[i], at(at(path, "torsion"), i));
      if (m < 2) throw SchemaError(at(at(path, "torsion"), i), "torsion moduli must be at least 2");
      spec.torsion.push_back(m);
    }
  }
  GradingGroup group(spec.free_rank, spec.torsion);
  const auto& d = field(j, "degrees", path);
  const std::string dpath = at(path, "degrees");
  expect_array(d, dpath);
  if (d.size() != n) throw SchemaError(dpath, "expected one degree per variable");
  for (std::size_t i = 0; i < d.size(); ++i) spec.degrees.push_back(parse_degree(d[i], group, at(dpath, i)));
  return spec;
}

Grading to_grading(const GradingSpec& spec) { return Grading(GradingGroup(spec.free_rank, spec.torsion), spec.degrees); }

// Argument kinds per operation; a trailing '?' marks an optional argument.
const std::map<std::string, std::vector<std::string>>& signatures() {
  static const std::map<std::string, std::vector<std::string>> table{
      {"gb", {"ideal"}},
      {"normal_form", {"poly", "ideal"}},
      {"member", {"poly", "ideal"}},
      {"radical_member", {"poly", "ideal"}},
      {"equal", {"ideal", "ideal"}},
      {"intersect", {"ideal", "ideal"}},
      {"colon", {"ideal", "ideal"}},
      {"saturate", {"ideal", "poly"}},
      {"eliminate", {"ideal"}},
      {"components", {"poly"}},
      {"is_g_ideal", {"ideal"}},
      {"star", {"ideal"}},
      {"decompose", {"ideal"}},
      {"ass", {"ideal"}},
      {"min", {"ideal"}},
      {"dimension", {"ideal"}},
      {"g_radical", {"ideal"}},
      {"is_g_radical", {"ideal"}},
      {"is_g_prime", {"ideal"}},
      {"is_g_primary", {"ideal"}},
      {"gdecomp", {"ideal"}},
      {"g_ass", {"ideal"}},
      {"g_min", {"ideal"}},
      {"poset_component", {"ideal"}},
      {"fitting", {"matrix"}},
      {"graded_matrix_check", {"matrix"}},
      {"oracle", {"ideal", "ideal?"}},
      {"verify", {"ideal"}},
  };
  return table;
}

void check_options(const Job& job) {
  const std::string path = "command.options";
  const json& o = job.command.options;
  expect_object(o, path);
  reject_unknown(o, {"order", "degree_bound", "format", "j", "vars", "omega"}, path);
  if (o.contains("order")) {
    auto s = get_string(o["order"], at(path, "order"));
    if (s != "grevlex" && s != "lex") throw SchemaError(at(path, "order"), "expected \"grevlex\" or \"lex\"");
  }
  if (o.contains("degree_bound")) get_size(o["degree_bound"], at(path, "degree_bound"));
  if (o.contains("format")) {
    auto s = get_string(o["format"], at(path, "format"));
    if (s != "json" && s != "text") throw SchemaError(at(path, "format"), "expected \"json\" or \"text\"");
  }
  if (o.contains("j")) get_int(o["j"], at(path, "j"));
  if (o.contains("vars"))
    for (const auto& v : get_strings(o["vars"], at(path, "vars")))
      if (std::find(job.vars.begin(), job.vars.end(), v) == job.vars.end())
        throw SchemaError(at(path, "vars"), "unknown variable '" + v + "'");
  if (o.contains("omega"))
    for (const auto& v : get_strings(o["omega"], at(path, "omega")))
      if (!job.ideals.count(v)) throw SchemaError(at(path, "omega"), "unknown ideal '" + v + "'");
  if (job.command.op == "fitting" && !o.contains("j")) throw SchemaError(at(path, "j"), "missing field");
}

void check_command(const Job& job) {
  const auto& sigs = signatures();
  auto it = sigs.find(job.command.op);
  if (it == sigs.end()) throw SchemaError("command.op", "unknown operation '" + job.command.op + "'");
  const auto& kinds = it->second;
  const auto& args = job.command.args;
  std::size_t required = 0;
  for (const auto& k : kinds)
    if (k.back() != '?') ++required;
  if (args.size() < required || args.size() > kinds.size())
    throw SchemaError("command.args", "operation '" + job.command.op + "' takes " + std::to_string(required) +
                                          (required == kinds.size() ? "" : "-" + std::to_string(kinds.size())) +
                                          " arguments");
  for (std::size_t i = 0; i < args.size(); ++i) {
    std::string kind = kinds[i];
    if (kind.back() == '?') kind.pop_back();
    bool ok = (kind == "ideal" && job.ideals.count(args[i])) || (kind == "poly" && job.polys.count(args[i])) ||
              (kind == "matrix" && job.matrices.count(args[i]));
    if (!ok) throw SchemaError(at("command.args", i), "no " + kind + " named '" + args[i] + "'");
  }
  check_options(job);
}

// ---------------------------------------------------------------------------
// Execution

template <class F>
Monomial leading_monomial(const Polynomial<F>& f, const TermOrder& order) {
  return f.leading_term(order).monomial;
}

template <class F>
json basis_json(const std::vector<Polynomial<F>>& elements, const TermOrder& order) {
  std::vector<std::pair<Monomial, std::string>> keyed;
  for (const auto& e : elements) keyed.push_back({leading_monomial(e, order), e.to_string()});
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  json out = json::array();
  for (auto& [m, s] : keyed) out.push_back(std::move(s));
  return out;
}

template <class F>
json gens(const Ideal<F>& ideal) {
  return basis_json(ideal.basis().elements(), TermOrder::grevlex());
}

template <class F>
json ideal_list(const std::vector<Ideal<F>>& ideals) {
  std::vector<json> items;
  for (const auto& i : ideals) items.push_back(gens(i));
  std::sort(items.begin(), items.end());
  return json(items);
}

std::string status_name(Provenance p) { return p == Provenance::verified ? "verified" : "assumed"; }

json report_json(const Report& report) {
  json checks = json::array();
  for (const auto& e : report) {
    json c{{"name", e.name}, {"status", to_string(e.status)}};
    if (!e.detail.empty()) c["detail"] = e.detail;
    checks.push_back(std::move(c));
  }
  return checks;
}

json verdict_json(const OracleVerdict& v) {
  json j{{"verdict", to_string(v.status)},
         {"oracle_dimension", v.oracle_dimension},
         {"candidate_dimension", v.candidate_dimension},
         {"heuristic", v.heuristic}};
  if (!v.witness.empty()) j["witness"] = v.witness;
  if (!v.detail.empty()) j["detail"] = v.detail;
  return j;
}

template <class F>
class Runner {
 public:
  Runner(const Job& job, RingPtr<F> ring) : job_(job), ring_(std::move(ring)), graded_(ring_, to_grading(job.grading)) {}

  json run() {
    const auto& op = job_.command.op;
    const auto& args = job_.command.args;
    const json& o = job_.command.options;

    if (op == "gb") {
      TermOrder order = o.value("order", "grevlex") == "lex" ? TermOrder::lex() : TermOrder::grevlex();
      return {{"generators", basis_json(groebner_basis(ideal(args[0]), order).elements(), order)}};
    }
    if (op == "normal_form") return {{"normal_form", normal_form(poly(args[0]), ideal(args[1]).basis()).to_string()}};
    if (op == "member") return {{"value", ideal_member(poly(args[0]), ideal(args[1]))}};
    if (op == "radical_member") return {{"value", radical_member(poly(args[0]), ideal(args[1]))}};
    if (op == "equal") return {{"value", ideal_equal(ideal(args[0]), ideal(args[1]))}};
    if (op == "intersect") return {{"generators", gens(intersect(ideal(args[0]), ideal(args[1])))}};
    if (op == "colon") return {{"generators", gens(colon(ideal(args[0]), ideal(args[1])))}};
    if (op == "saturate") {
      auto s = saturate(ideal(args[0]), poly(args[1]));
      return {{"generators", gens(s.ideal)}, {"exponent", s.exponent}};
    }
    if (op == "eliminate") {
      std::vector<std::size_t> vars;
      for (const auto& v : o.value("vars", std::vector<std::string>{})) vars.push_back(*ring_->index_of(v));
      return {{"generators", gens(eliminate(ideal(args[0]), vars))}};
    }
    if (op == "components") {
      json parts = json::array();
      for (const auto& [deg, part] : homogeneous_components(poly(args[0]), graded_))
        parts.push_back({{"degree", degree_json(deg)}, {"polynomial", part.to_string()}});
      return {{"components", parts}};
    }
    if (op == "is_g_ideal") return {{"value", is_g_ideal(ideal(args[0]), graded_)}};
    if (op == "star") return {{"generators", gens(star(ideal(args[0]), graded_))}};
    if (op == "decompose" || op == "ass" || op == "min" || op == "dimension") return classical(op, args[0]);
    if (op == "g_radical") return {{"generators", gens(g_radical(ideal(args[0]), graded_, cert(args[0])))}};
    if (op == "is_g_radical") return verdict(is_g_radical(ideal(args[0]), graded_, cert(args[0])));
    if (op == "is_g_prime") return verdict(is_g_prime(ideal(args[0]), graded_, cert(args[0])));
    if (op == "is_g_primary") return verdict(is_g_primary(ideal(args[0]), graded_, cert(args[0])));
    if (op == "gdecomp") return gdecomp_json(g_primary_decomposition(ideal(args[0]), graded_, cert(args[0])));
    if (op == "g_ass") return {{"primes", ideal_list(g_associated_primes(ideal(args[0]), graded_, cert(args[0])))}};
    if (op == "g_min") return {{"primes", ideal_list(g_minimal_primes(ideal(args[0]), graded_, cert(args[0])))}};
    if (op == "poset_component") {
      auto d = g_primary_decomposition(ideal(args[0]), graded_, cert(args[0]));
      std::vector<Ideal<F>> omega;
      for (const auto& name : o.value("omega", std::vector<std::string>{})) omega.push_back(ideal(name));
      auto p = poset_component<F>(d, omega);
      return {{"generators", gens(p.ideal)}, {"exponent", p.exponent}};
    }
    if (op == "fitting") return {{"generators", gens(fitting_ideal(matrix(args[0]), o["j"].get<long>()))}};
    if (op == "graded_matrix_check") {
      auto report = graded_matrix_check(matrix(args[0]), graded_);
      return {{"checks", report_json(report)}, {"verdict", report_passes(report) ? "pass" : "fail"}};
    }
    if (op == "oracle") return verdict_json(oracle(args[0], args.size() > 1 ? &args[1] : nullptr));
    if (op == "verify") {
      auto i = ideal(args[0]);
      auto report = is_g_ideal(i, graded_) ? verify_theorem_suite(i, graded_, cert(args[0]))
                                           : verify_theorem_suite(star(i, graded_), graded_);
      auto v = oracle(args[0], nullptr);
      bool ok = report_passes(report) && v.status == OracleStatus::pass;
      return {{"checks", report_json(report)}, {"oracle", verdict_json(v)}, {"verdict", ok ? "pass" : "fail"}};
    }
    throw Error("operation '" + op + "' is not wired");
  }

 private:
  Ideal<F> ideal(const std::string& name) const {
    std::vector<Polynomial<F>> polys;
    for (const auto& s : job_.ideals.at(name)) polys.push_back(parse_polynomial(s, ring_));
    return Ideal<F>(ring_, std::move(polys));
  }
  Polynomial<F> poly(const std::string& name) const { return parse_polynomial(job_.polys.at(name), ring_); }

  PresentationMatrix<F> matrix(const std::string& name) const {
    const auto& spec = job_.matrices.at(name);
    std::vector<Polynomial<F>> entries;
    for (const auto& s : spec.entries) entries.push_back(parse_polynomial(s, ring_));
    PresentationMatrix<F> m(ring_, spec.rows, spec.cols, std::move(entries));
    m.row_degrees = spec.row_degrees;
    m.col_degrees = spec.col_degrees;
    return m;
  }

  std::span<const CertificateComponent<F>> cert(const std::string& name) {
    auto it = job_.certificates.find(name);
    if (it == job_.certificates.end()) return {};
    auto& slot = certs_[name];
    if (slot.empty()) {
      for (const auto& c : it->second) {
        std::vector<Polynomial<F>> comp, rad;
        for (const auto& s : c.component) comp.push_back(parse_polynomial(s, ring_));
        std::optional<Ideal<F>> radical;
        if (c.radical) {
          for (const auto& s : *c.radical) rad.push_back(parse_polynomial(s, ring_));
          radical = Ideal<F>(ring_, std::move(rad));
        }
        slot.push_back({Ideal<F>(ring_, std::move(comp)), std::move(radical)});
      }
    }
    return slot;
  }

  static json verdict(const Verdict& v) { return {{"value", v.holds}, {"status", status_name(v.status)}}; }

  json classical(const std::string& op, const std::string& name) {
    auto d = classical_decomposition(ideal(name), cert(name));
    if (op == "decompose") {
      json comps = json::array();
      for (const auto& c : d.components)
        comps.push_back({{"component", gens(c.component)}, {"radical", gens(c.radical)}, {"status", status_name(c.status)}});
      return {{"components", comps}, {"minimal", d.minimal}};
    }
    if (op == "ass") return {{"primes", ideal_list(associated_primes(d))}};
    if (op == "min") return {{"primes", ideal_list(minimal_primes(d))}};
    std::size_t dim = 0;
    for (const auto& p : minimal_primes(d)) {
      auto pd = prime_dimension(p);
      if (!pd) throw UnsupportedClass("dimension of a minimal prime is not computable");
      dim = std::max(dim, *pd);
    }
    return {{"dimension", dim}};
  }

  static json gdecomp_json(const GDecomposition<F>& d) {
    json comps = json::array();
    for (const auto& c : d.components)
      comps.push_back({{"component", gens(c.component)}, {"g_radical", gens(c.g_radical)}, {"status", status_name(c.status)}});
    return {{"components", comps}, {"minimal", d.minimal}};
  }

  OracleVerdict oracle(const std::string& name, const std::string* candidate) const {
    unsigned bound = static_cast<unsigned>(job_.command.options.value("degree_bound", 8));
    if constexpr (std::is_same_v<F, PrimeField>) {
      std::optional<Ideal<F>> cand;
      if (candidate) cand = ideal(*candidate);
      return oracle_compare(ideal(name), graded_, bound, cand);
    } else {
      if (candidate) throw UnsupportedClass("candidate comparison over Q is not supported");
      return oracle_compare(ideal(name), graded_, bound);
    }
  }

  const Job& job_;
  RingPtr<F> ring_;
  GradedRing<F> graded_;
  std::map<std::string, std::vector<CertificateComponent<F>>> certs_;
};

std::string paren(const json& generators) {
  std::string s = "(";
  for (std::size_t i = 0; i < generators.size(); ++i) s += (i ? ", " : "") + generators[i].get<std::string>();
  return s + ")";
}

std::string scalar(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

}  // namespace

Job parse_job(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("$", std::string("invalid JSON: ") + e.what());
  }
  expect_object(root, "$");
  reject_unknown(root, {"ring", "grading", "ideals", "polys", "matrices", "certificates", "command"}, "");

  Job job;
  const auto& ring = field(root, "ring", "");
  expect_object(ring, "ring");
  reject_unknown(ring, {"field", "vars"}, "ring");
  job.field = get_string(field(ring, "field", "ring"), "ring.field");
  job.vars = get_strings(field(ring, "vars", "ring"), "ring.vars");
  static const std::regex ident(R"([A-Za-z_][A-Za-z0-9_]*)");
  for (std::size_t i = 0; i < job.vars.size(); ++i)
    if (!std::regex_match(job.vars[i], ident)) throw SchemaError(at("ring.vars", i), "not a valid variable name");
  if (job.vars.empty()) throw SchemaError("ring.vars", "at least one variable is required");

  job.grading = root.contains("grading") ? parse_grading(root["grading"], job.vars.size())
                                          : preset("fine", job.vars.size(), "grading");

  with_ring(job.field, job.vars, [&](auto r) {
    job.field = canonical_field(job.field);
    if (root.contains("ideals")) {
      const auto& ideals = root["ideals"];
      expect_object(ideals, "ideals");
      for (const auto& [name, gens] : ideals.items()) {
        const std::string path = at("ideals", name);
        auto list = get_strings(gens, path);
        std::vector<std::string> canon;
        for (std::size_t i = 0; i < list.size(); ++i) canon.push_back(canonical_poly(list[i], r, at(path, i)));
        job.ideals[name] = std::move(canon);
      }
    }
    if (root.contains("polys")) {
      const auto& polys = root["polys"];
      expect_object(polys, "polys");
      for (const auto& [name, text] : polys.items())
        job.polys[name] = canonical_poly(get_string(text, at("polys", name)), r, at("polys", name));
    }
    if (root.contains("matrices")) {
      const auto& mats = root["matrices"];
      expect_object(mats, "matrices");
      GradingGroup group(job.grading.free_rank, job.grading.torsion);
      for (const auto& [name, m] : mats.items()) {
        const std::string path = at("matrices", name);
        expect_object(m, path);
        reject_unknown(m, {"rows", "cols", "entries", "row_degrees", "col_degrees"}, path);
        MatrixSpec spec;
        spec.rows = get_size(field(m, "rows", path), at(path, "rows"));
        spec.cols = get_size(field(m, "cols", path), at(path, "cols"));
        auto entries = get_strings(field(m, "entries", path), at(path, "entries"));
        if (entries.size() != spec.rows * spec.cols) throw SchemaError(at(path, "entries"), "expected rows × cols entries");
        for (std::size_t i = 0; i < entries.size(); ++i)
          spec.entries.push_back(canonical_poly(entries[i], r, at(at(path, "entries"), i)));
        auto degrees = [&](const char* key, std::size_t count) -> std::optional<std::vector<Hdeg>> {
          if (!m.contains(key)) return std::nullopt;
          const std::string dpath = at(path, key);
          expect_array(m[key], dpath);
          if (m[key].size() != count) throw SchemaError(dpath, "expected " + std::to_string(count) + " degrees");
          std::vector<Hdeg> out;
          for (std::size_t i = 0; i < count; ++i) out.push_back(parse_degree(m[key][i], group, at(dpath, i)));
          return out;
        };
        spec.row_degrees = degrees("row_degrees", spec.rows);
        spec.col_degrees = degrees("col_degrees", spec.cols);
        job.matrices[name] = std::move(spec);
      }
    }
    if (root.contains("certificates")) {
      const auto& certs = root["certificates"];
      expect_object(certs, "certificates");
      for (const auto& [name, list] : certs.items()) {
        const std::string path = at("certificates", name);
        if (!job.ideals.count(name)) throw SchemaError(path, "no ideal named '" + name + "'");
        expect_array(list, path);
        std::vector<CertificateSpec> specs;
        for (std::size_t i = 0; i < list.size(); ++i) {
          const std::string cpath = at(path, i);
          expect_object(list[i], cpath);
          reject_unknown(list[i], {"component", "radical"}, cpath);
          CertificateSpec c;
          auto comp = get_strings(field(list[i], "component", cpath), at(cpath, "component"));
          for (std::size_t k = 0; k < comp.size(); ++k)
            c.component.push_back(canonical_poly(comp[k], r, at(at(cpath, "component"), k)));
          if (list[i].contains("radical")) {
            auto rad = get_strings(list[i]["radical"], at(cpath, "radical"));
            std::vector<std::string> canon;
            for (std::size_t k = 0; k < rad.size(); ++k)
              canon.push_back(canonical_poly(rad[k], r, at(at(cpath, "radical"), k)));
            c.radical = std::move(canon);
          }
          specs.push_back(std::move(c));
        }
        job.certificates[name] = std::move(specs);
      }
    }
    return 0;
  });

  const auto& cmd = field(root, "command", "");
  expect_object(cmd, "command");
  reject_unknown(cmd, {"op", "args", "options"}, "command");
  job.command.op = get_string(field(cmd, "op", "command"), "command.op");
  if (cmd.contains("args")) job.command.args = get_strings(cmd["args"], "command.args");
  if (cmd.contains("options")) job.command.options = cmd["options"];
  check_command(job);
  return job;
}

json job_to_json(const Job& job) {
  json j;
  j["ring"] = {{"field", job.field}, {"vars", job.vars}};
  json degrees = json::array();
  for (const auto& d : job.grading.degrees) degrees.push_back(degree_json(d));
  j["grading"] = {{"free_rank", job.grading.free_rank}, {"torsion", job.grading.torsion}, {"degrees", degrees}};
  if (!job.ideals.empty()) j["ideals"] = job.ideals;
  if (!job.polys.empty()) j["polys"] = job.polys;
  if (!job.matrices.empty()) {
    json mats = json::object();
    for (const auto& [name, m] : job.matrices) {
      json e{{"rows", m.rows}, {"cols", m.cols}, {"entries", m.entries}};
      auto list = [](const std::vector<Hdeg>& ds) {
        json a = json::array();
        for (const auto& d : ds) a.push_back(degree_json(d));
        return a;
      };
      if (m.row_degrees) e["row_degrees"] = list(*m.row_degrees);
      if (m.col_degrees) e["col_degrees"] = list(*m.col_degrees);
      mats[name] = std::move(e);
    }
    j["matrices"] = std::move(mats);
  }
  if (!job.certificates.empty()) {
    json certs = json::object();
    for (const auto& [name, list] : job.certificates) {
      json a = json::array();
      for (const auto& c : list) {
        json e{{"component", c.component}};
        if (c.radical) e["radical"] = *c.radical;
        a.push_back(std::move(e));
      }
      certs[name] = std::move(a);
    }
    j["certificates"] = std::move(certs);
  }
  j["command"] = {{"op", job.command.op}, {"args", job.command.args}, {"options", job.command.options}};
  return j;
}

ResultDocument input_error(const std::string& message) {
  ResultDocument doc;
  doc.status = "error";
  doc.reason = "input-error";
  doc.message = message;
  return doc;
}

ResultDocument execute_job(const Job& job, bool with_timing) {
  ResultDocument doc;
  doc.op = job.command.op;
  auto start = std::chrono::steady_clock::now();
  try {
    doc.payload = with_ring(job.field, job.vars, [&](auto ring) {
      using F = typename std::decay_t<decltype(ring->field())>;
      return Runner<F>(job, ring).run();
    });
  } catch (const UnsupportedClass& e) {
    doc.status = "unsupported";
    doc.reason = "unsupported-class";
    doc.message = e.what();
  } catch (const SchemaError& e) {
    doc = input_error(e.what());
  } catch (const ParseError& e) {
    doc = input_error(e.what());
  } catch (const DomainError& e) {
    doc = input_error(e.what());
  } catch (const RingMismatch& e) {
    doc = input_error(e.what());
  } catch (const std::exception& e) {
    doc.status = "error";
    doc.reason = "internal-error";
    doc.message = e.what();
  }
  doc.op = job.command.op;
  if (with_timing)
    doc.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return doc;
}

std::string render_result(const ResultDocument& doc, Format format) {
  if (format == Format::json) {
    json j{{"status", doc.status}, {"op", doc.op}, {"payload", doc.payload}};
    if (!doc.reason.empty()) j["reason"] = doc.reason;
    if (!doc.message.empty()) j["message"] = doc.message;
    if (doc.timing_ms) j["timing_ms"] = *doc.timing_ms;
    return j.dump(2) + "\n";
  }
  std::string out = "status: " + doc.status + "\n";
  if (!doc.op.empty()) out += "op: " + doc.op + "\n";
  if (!doc.reason.empty()) out += "reason: " + doc.reason + "\n";
  if (!doc.message.empty()) out += "message: " + doc.message + "\n";
  for (const auto& [key, value] : doc.payload.items()) {
    if (key == "generators") {
      out += "generators: " + paren(value) + "\n";
    } else if (key == "primes") {
      out += "primes:\n";
      for (const auto& p : value) out += "  " + paren(p) + "\n";
    } else if (key == "components" && !value.empty() && value[0].contains("component")) {
      out += "components:\n";
      for (const auto& c : value) {
        const auto& rad = c.contains("g_radical") ? c["g_radical"] : c["radical"];
        out += "  " + paren(c["component"]) + " ⊣ " + paren(rad);
        if (c.value("status", "verified") != "verified") out += " [" + c["status"].get<std::string>() + "]";
        out += "\n";
      }
    } else if (key == "components") {
      out += "components:\n";
      for (const auto& c : value) out += "  " + c["degree"].dump() + ": " + c["polynomial"].get<std::string>() + "\n";
    } else if (key == "checks") {
      out += "checks:\n";
      for (const auto& c : value) {
        out += "  " + c["name"].get<std::string>() + ": " + c["status"].get<std::string>();
        if (c.contains("detail")) out += " (" + c["detail"].get<std::string>() + ")";
        out += "\n";
      }
    } else if (value.is_object()) {
      out += key + ":\n";
      for (const auto& [k, v] : value.items()) out += "  " + k + ": " + scalar(v) + "\n";
    } else {
      out += key + ": " + scalar(value) + "\n";
    }
  }
  if (doc.timing_ms) out += "timing_ms: " + std::to_string(*doc.timing_ms) + "\n";
  return out;
}

ResultDocument parse_result(std::string_view text) {
  json j = json::parse(text);
  ResultDocument doc;
  doc.status = j.at("status").get<std::string>();
  doc.op = j.value("op", "");
  doc.reason = j.value("reason", "");
  doc.message = j.value("message", "");
  doc.payload = j.value("payload", json::object());
  if (j.contains("timing_ms")) doc.timing_ms = j["timing_ms"].get<double>();
  return doc;
}

int exit_code(const ResultDocument& doc) {
  if (doc.status == "unsupported") return 3;
  if (doc.status == "error") return doc.reason == "input-error" ? 2 : 1;
  if (doc.payload.is_object() && doc.payload.value("verdict", "pass") != "pass") return 1;
  return 0;
}

}  // namespace grady
