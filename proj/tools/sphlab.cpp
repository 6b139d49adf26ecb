// Command-line front end: K-type tables, zonal values, verifiers, and spherical function evaluation.
//
// Exit codes: 0 success, 1 verification failure or inadmissible (tau, delta), 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sphlab/serialize.hpp"
#include "sphlab/verify.hpp"

using namespace sphlab;
using json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Inadmissible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string out;
  std::string format;
  /// Significant digits; unset means the shortest representation that round-trips.
  std::optional<int> precision;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) parts.push_back(item);
  return parts;
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + s + "'");
  }
  if (used != s.size()) throw UsageError("not a number: '" + s + "'");
  return v;
}

int parse_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw UsageError("not an integer: '" + s + "'");
  }
  if (used != s.size()) throw UsageError("not an integer: '" + s + "'");
  return v;
}

std::vector<double> parse_doubles(const std::string& s) {
  std::vector<double> v;
  for (const auto& part : split(s, ',')) v.push_back(parse_double(part));
  return v;
}

void require_n(int n) {
  if (n != 2 && n != 3) throw UsageError("n must be 2 or 3");
}

/// tau label of SO(n+1): "l" for n = 2, "p,q" for n = 3.
HighestWeight parse_tau(int n, const std::string& s) {
  const auto parts = split(s, ',');
  HighestWeight w = n == 2 ? (parts.size() == 1 ? HighestWeight::so3(parse_int(parts[0])) : HighestWeight{})
                           : (parts.size() == 2 ? HighestWeight::so4(parse_int(parts[0]), parse_int(parts[1]))
                                                : HighestWeight{});
  if (w.entries.empty() || !validate_weight(w)) {
    throw UsageError("invalid tau '" + s + "' for n = " + std::to_string(n) + (n == 2 ? " (expected l >= 0)" : " (expected p,q with p >= |q|)"));
  }
  return w;
}

struct DeltaSpec {
  std::optional<HighestWeight> so;
  std::optional<OType> o;
};

/// "j" or "m" for an SO(n)-type; "O:j:+" / "O:j:-" for tensor (n = 3) or self-conjugate (n = 2)
/// O(n)-types; "O:m" for the doubled O(2)-type.
DeltaSpec parse_delta(int n, const std::string& s) {
  DeltaSpec d;
  const auto parts = split(s, ':');
  try {
    if (parts.size() == 1) {
      d.so = n == 2 ? HighestWeight::so2(parse_int(parts[0])) : HighestWeight::so3(parse_int(parts[0]));
      require_valid(*d.so);
      return d;
    }
    if (parts[0] != "O" || parts.size() > 3) throw UsageError("invalid delta '" + s + "'");
    const HighestWeight pi = n == 2 ? HighestWeight::so2(parse_int(parts[1])) : HighestWeight::so3(parse_int(parts[1]));
    if (parts.size() == 2) {
      if (n != 2) throw UsageError("O(3)-types need a sign: O:j:+ or O:j:-");
      d.o = OType::doubled(pi);
      return d;
    }
    if (parts[2] != "+" && parts[2] != "-") throw UsageError("sign must be + or -");
    const bool plus = parts[2] == "+";
    d.o = n == 2 ? OType::self_conjugate(pi, plus ? 1 : -1) : OType::odd_tensor(pi, !plus);
  } catch (const Error& e) {
    throw UsageError("invalid delta '" + s + "': " + e.what());
  }
  return d;
}

/// identity | euler:a,b,c (n = 2) | quat:w,x,y,z,w,x,y,z (n = 3) | angle:t |
/// angles:t1,...  (product of exp(t I_ki) in basis order) | file:PATH.
GroupElement parse_g(int n, const std::string& s) {
  const std::size_t dim = static_cast<std::size_t>(n) + 1;
  const auto colon = s.find(':');
  const std::string kind = s.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : s.substr(colon + 1);
  try {
    if (kind == "identity") return GroupElement::identity(dim);
    if (kind == "angle") return plane_rotation(dim, dim, dim - 1, parse_double(rest));
    if (kind == "euler") {
      if (n != 2) throw UsageError("euler angles describe SO(3); use quat or angles for n = 3");
      const auto v = parse_doubles(rest);
      if (v.size() != 3) throw UsageError("euler needs three angles");
      return euler_zyz(v[0], v[1], v[2]);
    }
    if (kind == "quat") {
      if (n != 3) throw UsageError("quaternion pairs describe SO(4); use euler or angles for n = 2");
      const auto v = parse_doubles(rest);
      if (v.size() != 8) throw UsageError("quat needs eight numbers: left w,x,y,z then right w,x,y,z");
      const Quaternion left = Quaternion{v[0], v[1], v[2], v[3]}.normalized();
      const Quaternion right = Quaternion{v[4], v[5], v[6], v[7]}.normalized();
      return GroupElement(so4_matrix(left, right));
    }
    if (kind == "angles") {
      const auto v = parse_doubles(rest);
      const auto basis = lie_basis_elements(dim);
      if (v.size() != basis.size()) throw UsageError("angles needs " + std::to_string(basis.size()) + " numbers");
      GroupElement g = GroupElement::identity(dim);
      for (std::size_t i = 0; i < v.size(); ++i) g = g * plane_rotation(dim, basis[i].k, basis[i].i, v[i]);
      return g;
    }
    if (kind == "file") {
      std::ifstream in(rest);
      if (!in) throw UsageError("cannot open '" + rest + "'");
      Matrix m(dim, dim);
      for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c)
          if (!(in >> m(r, c))) throw UsageError("file must hold " + std::to_string(dim * dim) + " numbers");
      const GroupElement g(m);
      if (g.det_sign() != 1) throw UsageError("g must have determinant +1");
      return g;
    }
  } catch (const Error& e) {
    throw UsageError("invalid g '" + s + "': " + e.what());
  }
  throw UsageError("unknown g spec '" + s + "'");
}

std::string timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  std::ostringstream os;
  os << std::put_time(&utc, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(g.out);
  if (!out) throw UsageError("cannot write '" + g.out + "'");
  out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string num(double v, std::optional<int> precision) {
  if (!precision) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
  }
  std::ostringstream os;
  os << std::setprecision(*precision) << v;
  return os.str();
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

// ---- ktypes ---------------------------------------------------------------

int run_ktypes(const Globals& g, int n, int max_label) {
  require_n(n);
  if (max_label < 0) throw UsageError("--max must be nonnegative");
  const json rows = classification_table(static_cast<std::size_t>(n), max_label);
  if (g.format == "csv") {
    std::ostringstream os;
    os << "n,so_weight,variant,partner_weight,sign,dim\n";
    for (const auto& row : rows)
      for (const auto& t : row["o_types"]) {
        os << n << "," << csv_quote(row["so_weight"].dump()) << "," << t["variant"].get<std::string>() << ","
           << (t.contains("partner_weight") ? csv_quote(t["partner_weight"].dump()) : "") << ","
           << (t.contains("sign") ? std::to_string(t["sign"].get<int>()) : "") << "," << t["dim"].get<long long>()
           << "\n";
      }
    emit(g, os.str());
  } else {
    json j{{"command", "ktypes"}, {"config", {{"n", n}, {"max", max_label}}}, {"rows", rows}};
    emit(g, dump(j));
  }
  return 0;
}

// ---- zonal ----------------------------------------------------------------

int run_zonal(const Globals& g, const std::string& space, int n, int j_max, int grid, const std::string& thetas) {
  if (space != "sphere" && space != "projective") throw UsageError("--space must be sphere or projective");
  if (n < 2) throw UsageError("n must be at least 2");
  if (j_max < 0) throw UsageError("--jmax must be nonnegative");
  std::vector<double> points;
  if (!thetas.empty()) {
    points = parse_doubles(thetas);
    for (double t : points)
      if (!(t >= 0.0 && t <= std::numbers::pi)) throw UsageError("theta values must lie in [0, pi]");
  } else {
    if (grid < 2) throw UsageError("--grid needs at least 2 points");
    // Chebyshev-Lobatto points on [0, pi].
    for (int i = 0; i < grid; ++i) points.push_back(0.5 * std::numbers::pi * (1.0 - std::cos(std::numbers::pi * i / (grid - 1))));
  }
  const ZonalParams params = ZonalParams::make(space == "sphere" ? Space::sphere : Space::projective, n);
  if (g.format == "json") {
    json rows = json::array();
    for (int j = 0; j <= j_max; ++j)
      for (double t : points) rows.push_back({{"space", space}, {"n", n}, {"j", j}, {"theta", t}, {"value", zonal(params, j, t)}});
    json out{{"command", "zonal"},
             {"config", {{"space", space}, {"n", n}, {"jmax", j_max}, {"alpha", params.alpha}, {"beta", params.beta}}},
             {"rows", rows}};
    emit(g, dump(out));
    return 0;
  }
  std::ostringstream os;
  os << "space,n,j,theta,value\n";
  for (int j = 0; j <= j_max; ++j)
    for (double t : points)
      os << space << "," << n << "," << j << "," << num(t, g.precision) << "," << num(zonal(params, j, t), g.precision) << "\n";
  emit(g, os.str());
  return 0;
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::string which;
  std::optional<int> n;
  std::string tau;
  std::optional<int> pi;
  std::optional<int> l;
  std::optional<int> m;
  std::optional<int> max_label;
  std::vector<std::string> tols;
  std::uint64_t seed = VerifyConfig{}.seed;
  int samples = VerifyConfig{}.samples;
  std::optional<int> band;
  std::optional<std::uint64_t> basis_seed;
  bool deterministic = false;
};

VerifyConfig make_config(const VerifyArgs& a) {
  VerifyConfig cfg;
  cfg.seed = a.seed;
  cfg.samples = a.samples;
  cfg.band_override = a.band;
  cfg.basis_seed = a.basis_seed;
  for (const std::string& t : a.tols) {
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw UsageError("--tol expects NAME=VALUE");
    const std::string name = t.substr(0, eq);
    if (!VerifyConfig::default_tolerances().contains(name)) throw UsageError("unknown tolerance '" + name + "'");
    const double v = parse_double(t.substr(eq + 1));
    if (!(v > 0.0)) throw UsageError("tolerance must be positive");
    cfg.tolerance_overrides[name] = v;
  }
  if (a.band && *a.band < 0) throw UsageError("--band must be nonnegative");
  if (a.samples < 1) throw UsageError("--samples must be positive");
  return cfg;
}

void require_n_value(const VerifyArgs& a, int needed, const std::string& why) {
  if (a.n && *a.n != needed) throw UsageError(a.which + " requires n = " + std::to_string(needed) + " (" + why + ")");
}

std::vector<VerificationReport> run_verifier(const VerifyArgs& a, const VerifyConfig& cfg) {
  const std::string& w = a.which;
  if (a.n) require_n(*a.n);
  if (w == "jacobi") return verify_jacobi(cfg);
  if (w == "zonal-correspondence") return verify_zonal_correspondence(cfg);
  if (w == "functional-equation") {
    std::vector<VerificationReport> out;
    for (int n : {2, 3}) {
      if (a.n && *a.n != n) continue;
      const int max_label = a.max_label.value_or(n == 2 ? 4 : 3);
      std::optional<HighestWeight> tau;
      if (!a.tau.empty()) {
        if (!a.n) throw UsageError("--tau needs --n");
        tau = parse_tau(n, a.tau);
      }
      auto rs = verify_functional_equation(n, max_label, cfg, tau);
      out.insert(out.end(), rs.begin(), rs.end());
    }
    return out;
  }
  if (w == "par") {
    require_n_value(a, 3, "the sign of Phi(-I) needs odd n");
    if (!a.tau.empty() || a.pi) {
      if (a.tau.empty() || !a.pi) throw UsageError("par needs both --tau p,q and --pi j, or neither");
      const HighestWeight tau = parse_tau(3, a.tau);
      if (!branching_contains(tau, HighestWeight::so3(*a.pi))) {
        throw Inadmissible("SO(3)-type (" + std::to_string(*a.pi) + ") does not occur in " + to_string(tau) +
                           ": needs |q| <= j <= p");
      }
      return {check_theorem_par(tau.entries[0], tau.entries[1], *a.pi, cfg)};
    }
    return verify_par(a.max_label.value_or(3), cfg);
  }
  if (w == "impar") {
    require_n_value(a, 2, "the self-conjugate case is even n");
    if (a.m && *a.m != 0) throw UsageError("impar applies to pi = (0) only");
    if (a.l) return {check_theorem_impar(*a.l, 0, cfg)};
    return verify_impar(a.max_label.value_or(6), cfg);
  }
  if (w == "matrix") {
    require_n_value(a, 2, "doubled types need even n");
    if (a.l || a.m) {
      if (!a.l || !a.m) throw UsageError("matrix needs both --l and --m, or neither");
      if (!(*a.m != 0 && std::abs(*a.m) <= *a.l)) {
        throw Inadmissible("SO(2)-type (" + std::to_string(*a.m) + ") needs 0 < |m| <= l = " + std::to_string(*a.l));
      }
      return {check_theorem_matrix(*a.l, *a.m, cfg)};
    }
    return verify_matrix(a.max_label.value_or(6), cfg);
  }
  if (w == "weights") {
    require_n_value(a, 3, "the twist acts on SO(4) = SO(n+1)");
    if (!a.tau.empty()) {
      const HighestWeight tau = parse_tau(3, a.tau);
      return {check_theorem_weights(tau.entries[0], tau.entries[1], cfg)};
    }
    return verify_weights(a.max_label.value_or(2), cfg);
  }
  if (w == "all") {
    std::vector<VerificationReport> out;
    auto append = [&](std::vector<VerificationReport> rs) { out.insert(out.end(), rs.begin(), rs.end()); };
    append(verify_jacobi(cfg));
    append(verify_zonal_correspondence(cfg));
    append(verify_functional_equation(2, 4, cfg));
    append(verify_functional_equation(3, 3, cfg));
    append(verify_par(3, cfg));
    append(verify_impar(6, cfg));
    append(verify_matrix(6, cfg));
    append(verify_weights(2, cfg));
    return out;
  }
  throw UsageError("unknown verifier '" + w + "'");
}

int run_verify(const Globals& g, const VerifyArgs& a) {
  const VerifyConfig cfg = make_config(a);
  const std::vector<VerificationReport> reports = run_verifier(a, cfg);
  const bool passed = all_passed(reports);

  if (g.format == "csv") {
    std::ostringstream os;
    os << "theorem,n,tau,delta,residual,verdict,tolerance,seed,quadrature_group,band_limit,node_count\n";
    for (const auto& r : reports) {
      os << r.theorem << "," << r.n << "," << csv_quote(r.tau) << "," << csv_quote(r.delta) << ","
         << num(r.residual, g.precision) << "," << (r.verdict ? "true" : "false") << "," << num(r.tolerance, g.precision)
         << "," << r.seed << "," << r.quadrature.group << "," << r.quadrature.band_limit << "," << r.quadrature.node_count
         << "\n";
    }
    emit(g, os.str());
  } else {
    json tolerances = json::object();
    for (const auto& [name, value] : VerifyConfig::default_tolerances()) tolerances[name] = cfg.tol(name);
    json config{{"which", a.which}, {"seed", cfg.seed}, {"samples", cfg.samples}, {"tolerances", tolerances}};
    config["n"] = a.n ? json(*a.n) : json(nullptr);
    config["band_override"] = cfg.band_override ? json(*cfg.band_override) : json(nullptr);
    config["basis_seed"] = cfg.basis_seed ? json(*cfg.basis_seed) : json(nullptr);
    json j{{"command", "verify"}, {"config", config}};
    if (!a.deterministic) j["timestamp"] = timestamp();
    j["passed"] = passed;
    j["max_residual"] = max_residual(reports);
    j["reports"] = reports;
    emit(g, dump(j));
  }
  if (!g.out.empty()) {
    int failed = 0;
    for (const auto& r : reports) failed += r.verdict ? 0 : 1;
    std::cout << "verify " << a.which << ": " << reports.size() << " checks, " << failed << " failed, max residual "
              << max_residual(reports) << "\n";
  }
  for (const auto& r : reports)
    if (!r.verdict) std::cerr << "FAIL " << r.theorem << " tau=" << r.tau << " delta=" << r.delta << " residual=" << r.residual
                              << (r.note.empty() ? "" : " (" + r.note + ")") << "\n";
  return passed ? 0 : 1;
}

// ---- spherical ------------------------------------------------------------

int run_spherical(const Globals& g, int n, const std::string& tau_s, const std::string& delta_s, const std::string& g_s,
                  std::optional<int> band) {
  require_n(n);
  const HighestWeight tau_w = parse_tau(n, tau_s);
  const DeltaSpec delta = parse_delta(n, delta_s);
  const GroupElement x = parse_g(n, g_s);
  if (band && *band < 0) throw UsageError("--band must be nonnegative");
  const int b = band.value_or(2 * tau_w.entries.front() + 1);
  const UnitaryRep tau = so_irrep(tau_w);

  KType ktype = delta.so ? so_ktype(*delta.so) : o_ktype(*delta.o);
  if (delta.so && !branching_contains(tau_w, *delta.so)) {
    throw Inadmissible("SO(" + std::to_string(n) + ")-type " + to_string(*delta.so) + " does not occur in " +
                       to_string(tau_w) + (n == 2 ? ": needs |m| <= l" : ": needs |q| <= j <= p"));
  }
  if (delta.o) {
    const HighestWeight& pi = delta.o->weight;
    if (!branching_contains(tau_w, pi)) {
      throw Inadmissible("O(" + std::to_string(n) + ")-type " + to_string(*delta.o) + " does not occur in " +
                         to_string(tau_w) + ": its SO(" + std::to_string(n) + ")-type " + to_string(pi) +
                         " is not in the restriction");
    }
  }
  const GroupTag tag = delta.so ? (n == 2 ? GroupTag::SO2 : GroupTag::SO3) : (n == 2 ? GroupTag::O2 : GroupTag::O3);
  const QuadratureRule rule = haar_rule(tag, b);
  const IsotypicComponent comp = projector(tau, ktype, rule);
  if (comp.rank == 0) {
    throw Inadmissible("O(" + std::to_string(n) + ")-type " + ktype.label + " does not occur in " + to_string(tau_w) +
                       " (measured rank 0; the other O-type over the same SO-type occurs)");
  }
  const SphericalFunction phi(tau, ktype, comp);
  const CMatrix value = phi(x);

  if (g.format == "csv") {
    std::ostringstream os;
    os << "row,col,real,imag\n";
    for (Eigen::Index r = 0; r < value.rows(); ++r)
      for (Eigen::Index c = 0; c < value.cols(); ++c)
        os << r << "," << c << "," << num(value(r, c).real(), g.precision) << "," << num(value(r, c).imag(), g.precision)
           << "\n";
    emit(g, os.str());
    return 0;
  }
  json re = json::array(), im = json::array(), gm = json::array();
  for (Eigen::Index r = 0; r < value.rows(); ++r) {
    json rr = json::array(), ii = json::array();
    for (Eigen::Index c = 0; c < value.cols(); ++c) {
      rr.push_back(value(r, c).real());
      ii.push_back(value(r, c).imag());
    }
    re.push_back(rr);
    im.push_back(ii);
  }
  for (Eigen::Index r = 0; r < x.matrix().rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < x.matrix().cols(); ++c) row.push_back(x(r, c));
    gm.push_back(row);
  }
  json j{{"command", "spherical"},
         {"config", {{"n", n}, {"tau", to_string(tau_w)}, {"delta", ktype.label}, {"g", g_s}}},
         {"quadrature", {{"group", to_string(rule.group)}, {"band_limit", rule.band_limit}, {"node_count", rule.size()}}},
         {"rank", comp.rank},
         {"g", gm},
         {"geodesic_angle", geodesic_angle(x)},
         {"real", re},
         {"imag", im}};
  emit(g, dump(j));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spherical functions of (SO(n+1), SO(n)) and (SO(n+1), O(n)) for n = 2, 3"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  std::string format;
  app.add_option("--out", globals.out, "Write output to PATH instead of stdout");
  app.add_option("--format", format, "csv or json (default: csv for zonal, json otherwise)")
      ->check(CLI::IsMember({"csv", "json"}));
  int precision = 17;
  auto* opt_precision = app.add_option("--precision", precision, "Significant digits in CSV output (default: shortest exact)")
                            ->check(CLI::Range(1, 17));

  int kt_n = 0, kt_max = 0;
  auto* ktypes = app.add_subcommand("ktypes", "O(n)-types over each SO(n) weight.\n"
                                              "CSV columns: n,so_weight,variant,partner_weight,sign,dim");
  ktypes->add_option("--n", kt_n, "2 or 3")->required();
  ktypes->add_option("--max", kt_max, "Largest first weight entry")->required();

  std::string z_space;
  int z_n = 0, z_jmax = 0, z_grid = 64;
  std::string z_theta;
  auto* zonal_cmd = app.add_subcommand("zonal", "Normalized zonal spherical functions on a theta grid.\n"
                                                "CSV columns: space,n,j,theta,value");
  zonal_cmd->add_option("--space", z_space, "sphere or projective")->required();
  zonal_cmd->add_option("--n", z_n, "Dimension n >= 2")->required();
  zonal_cmd->add_option("--jmax", z_jmax, "Largest degree")->required();
  zonal_cmd->add_option("--grid", z_grid, "Number of Chebyshev-Lobatto points on [0, pi]")->capture_default_str();
  zonal_cmd->add_option("--theta", z_theta, "Comma-separated theta values, replacing the grid");

  VerifyArgs va;
  int v_n = 0, v_pi = 0, v_l = 0, v_m = 0, v_max = 0, v_band = 0;
  std::uint64_t v_basis_seed = 0;
  auto* verify = app.add_subcommand("verify", "Run a verifier suite.\n"
                                              "CSV columns: theorem,n,tau,delta,residual,verdict,tolerance,seed,"
                                              "quadrature_group,band_limit,node_count");
  verify->add_option("which", va.which, "jacobi | zonal-correspondence | functional-equation | par | impar | matrix | weights | all")
      ->required();
  auto* opt_n = verify->add_option("--n", v_n, "2 or 3");
  verify->add_option("--tau", va.tau, "SO(n+1) label: l for n = 2, p,q for n = 3");
  auto* opt_pi = verify->add_option("--pi", v_pi, "SO(3) label j (par)");
  auto* opt_l = verify->add_option("--l", v_l, "SO(3) label l (impar, matrix)");
  auto* opt_m = verify->add_option("--m", v_m, "SO(2) label m (matrix)");
  auto* opt_max = verify->add_option("--max", v_max, "Largest label in a sweep");
  verify->add_option("--tol", va.tols, "Tolerance override NAME=VALUE (repeatable)");
  verify->add_option("--seed", va.seed, "Random seed")->capture_default_str();
  verify->add_option("--samples", va.samples, "Random samples per check")->capture_default_str();
  auto* opt_band = verify->add_option("--band", v_band, "Quadrature band override");
  auto* opt_basis = verify->add_option("--basis-seed", v_basis_seed, "Rotate the basis of E(pi) by a random unitary");
  verify->add_flag("--deterministic", va.deterministic, "Omit the timestamp so reruns are byte-identical");

  int s_n = 0, s_band = 0;
  std::string s_tau, s_delta, s_g = "identity";
  auto* spherical = app.add_subcommand(
      "spherical",
      "Evaluate Phi^{tau,delta}(g).\n"
      "delta: j or m (SO(n)-type), O:j:+ / O:j:- (O(n)-type over a self-conjugate pi), O:m (doubled O(2)-type).\n"
      "g: identity | angle:t | euler:a,b,c (n=2) | quat:8 numbers (n=3) | angles:t1,... | file:PATH.\n"
      "CSV columns: row,col,real,imag");
  spherical->add_option("--n", s_n, "2 or 3")->required();
  spherical->add_option("--tau", s_tau, "SO(n+1) label")->required();
  spherical->add_option("--delta", s_delta, "K-type")->required();
  spherical->add_option("--g", s_g, "Group element")->capture_default_str();
  auto* opt_s_band = spherical->add_option("--band", s_band, "Quadrature band override");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (*opt_precision) globals.precision = precision;
  try {
    if (ktypes->parsed()) {
      globals.format = format.empty() ? "json" : format;
      return run_ktypes(globals, kt_n, kt_max);
    }
    if (zonal_cmd->parsed()) {
      globals.format = format.empty() ? "csv" : format;
      return run_zonal(globals, z_space, z_n, z_jmax, z_grid, z_theta);
    }
    if (verify->parsed()) {
      globals.format = format.empty() ? "json" : format;
      if (*opt_n) va.n = v_n;
      if (*opt_pi) va.pi = v_pi;
      if (*opt_l) va.l = v_l;
      if (*opt_m) va.m = v_m;
      if (*opt_max) va.max_label = v_max;
      if (*opt_band) va.band = v_band;
      if (*opt_basis) va.basis_seed = v_basis_seed;
      return run_verify(globals, va);
    }
    if (spherical->parsed()) {
      globals.format = format.empty() ? "json" : format;
      return run_spherical(globals, s_n, s_tau, s_delta, s_g, *opt_s_band ? std::optional<int>(s_band) : std::nullopt);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Inadmissible& e) {
    std::cerr << "inadmissible: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << to_string(e.code()) << ": " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::unsupported_group:
      case ErrorCode::validation:
      case ErrorCode::dimension:
        return 2;
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
