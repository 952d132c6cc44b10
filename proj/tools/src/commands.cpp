#include "qschur_cli/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "qschur/combinat/json.hpp"
#include "qschur/combinat/partition.hpp"
#include "qschur/exactalg/json.hpp"
#include "qschur/mixedalg/iota.hpp"
#include "qschur/mixedalg/json.hpp"
#include "qschur/mixedalg/rational_basis.hpp"
#include "qschur/qmatrix/json.hpp"
#include "qschur/qmatrix/standard_basis.hpp"
#include "qschur/tensorrep/algebra.hpp"
#include "qschur_cli/suites.hpp"

namespace qschur::cli {

namespace {

using json = nlohmann::json;

/// Raised for invalid parameters or input; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  Params p;
  std::string format = "json";
  std::string output;
  std::string input = "-";
  bool unsafe = false;
  bool rational = false;
  std::string basis_kind;
  std::string suite;
};

void validate(const Options& o) {
  const int nmax = o.unsafe ? 15 : 3;
  const int rsmax = o.unsafe ? 1000 : 2;
  const int mmax = o.unsafe ? 1000 : 4;
  if (o.p.n < 1 || o.p.n > nmax) throw UsageError("--n must lie in 1.." + std::to_string(nmax));
  if (o.p.r < 0 || o.p.r > rsmax) throw UsageError("--r must lie in 0.." + std::to_string(rsmax));
  if (o.p.s < 0 || o.p.s > rsmax) throw UsageError("--s must lie in 0.." + std::to_string(rsmax));
  if (o.p.m < 0 || o.p.m > mmax) throw UsageError("--m must lie in 0.." + std::to_string(mmax));
}

std::string rows_str(const combinat::Tableau& t) {
  std::string out;
  const auto rows = t.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out += "/";
    for (std::size_t j = 0; j < rows[i].size(); ++j) out += (j ? " " : "") + std::to_string(rows[i][j]);
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

json read_input(const Options& o, std::istream& in) {
  std::string text;
  if (o.input == "-") {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream f(o.input);
    if (!f) throw UsageError("cannot open input file " + o.input);
    text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
  }
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw UsageError(std::string("input is not valid JSON: ") + e.what());
  }
}

json coeff_entry(std::size_t idx, const exactalg::RationalFn& c) {
  json j;
  j["index"] = idx;
  j["coeff"] = c;
  return j;
}

// tableaux --------------------------------------------------------------

std::string cmd_tableaux(const Options& o) {
  json out = json::array();
  std::ostringstream csv;
  if (o.rational) {
    csv << "index,k,left,right\n";
    std::size_t idx = 0;
    for (const auto& e : combinat::enumerate_standard_rational(o.p.n, o.p.r, o.p.s)) {
      json j = combinat::rational_to_json(e.tableau, e.k);
      j["index"] = idx;
      out.push_back(j);
      csv << idx << "," << e.k << "," << csv_field(rows_str(e.tableau.left)) << "," << csv_field(rows_str(e.tableau.right)) << "\n";
      ++idx;
    }
  } else {
    csv << "index,shape,rows\n";
    std::size_t idx = 0;
    for (const auto& shape : combinat::partitions_of(o.p.m)) {
      for (const auto& t : combinat::enumerate_standard(shape, o.p.n)) {
        json j = t;
        j["index"] = idx;
        out.push_back(j);
        std::string sh;
        for (int part : shape.parts()) sh += (sh.empty() ? "" : " ") + std::to_string(part);
        csv << idx << "," << csv_field(sh) << "," << csv_field(rows_str(t)) << "\n";
        ++idx;
      }
    }
  }
  return o.format == "csv" ? csv.str() : out.dump(2) + "\n";
}

// basis -----------------------------------------------------------------

std::string cmd_basis(const Options& o) {
  json out = json::array();
  std::ostringstream csv;
  if (o.basis_kind == "ord") {
    const qmatrix::StandardBasis basis(mixedalg::mixed_algebra(o.p.n).plain(), o.p.m);
    csv << "index,t,t2,terms\n";
    for (std::size_t i = 0; i < basis.bitableaux().size(); ++i) {
      const auto& b = basis.bitableaux()[i];
      out.push_back({{"index", i}, {"t", b.t}, {"t2", b.t2}, {"element", basis.element(i)}});
      csv << i << "," << csv_field(rows_str(b.t)) << "," << csv_field(rows_str(b.t2)) << ","
          << basis.element(i).terms().size() << "\n";
    }
  } else {
    const auto& basis = mixedalg::rational_basis(o.p.n, o.p.r, o.p.s);
    csv << "index,k,left,right,terms\n";
    for (std::size_t i = 0; i < basis.bitableaux().size(); ++i) {
      const auto& b = basis.bitableaux()[i];
      out.push_back({{"index", i}, {"bitableau", mixedalg::rational_bitableau_to_json(b)}, {"element", basis.element(i)}});
      csv << i << "," << b.k << "," << csv_field(rows_str(b.rt.left) + "|" + rows_str(b.rt.right)) << ","
          << csv_field(rows_str(b.rt2.left) + "|" + rows_str(b.rt2.right)) << "," << basis.element(i).terms().size() << "\n";
    }
  }
  return o.format == "csv" ? csv.str() : out.dump(2) + "\n";
}

// straighten / iota -----------------------------------------------------

bool is_mixed_input(const json& j) {
  if (!j.is_array()) throw UsageError("element input must be a JSON array of terms");
  for (const auto& t : j) {
    if (!t.is_object()) throw UsageError("each term must be a JSON object");
    if (t.contains("plain") || t.contains("starred")) return true;
  }
  return false;
}

mixedalg::MixedElem parse_mixed(const json& j, int n) {
  mixedalg::MixedElem a;
  try {
    a = j.get<mixedalg::MixedElem>();
    return mixedalg::mixed_algebra(n).normal_form(a);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad mixed element: ") + e.what());
  }
}

void check_bidegree(const Options& o, int r, int s) {
  Options copy = o;
  copy.p.r = r;
  copy.p.s = s;
  validate(copy);
}

std::string cmd_straighten(const Options& o, std::istream& in) {
  const json input = read_input(o, in);
  const int n = o.p.n;
  json out;
  std::ostringstream csv;
  csv << "index,coeff\n";
  if (is_mixed_input(input)) {
    const auto a = parse_mixed(input, n);
    auto [r, s] = a.degree();
    if (a.is_zero()) std::tie(r, s) = std::pair{o.p.r, o.p.s};
    if (r < 0) throw UsageError("element is not bihomogeneous");
    check_bidegree(o, r, s);
    const auto& basis = mixedalg::rational_basis(n, r, s);
    out = {{"kind", "mixed"}, {"n", n}, {"r", r}, {"s", s}, {"coefficients", json::array()}};
    for (const auto& [idx, c] : basis.straighten(a)) {
      json e = coeff_entry(idx, c);
      e["bitableau"] = mixedalg::rational_bitableau_to_json(basis.bitableaux()[idx]);
      out["coefficients"].push_back(e);
      csv << idx << "," << csv_field(c.to_string()) << "\n";
    }
  } else {
    qmatrix::AlgebraElem a;
    try {
      a = mixedalg::mixed_algebra(n).plain().normal_form(input.get<qmatrix::AlgebraElem>());
    } catch (const std::exception& e) {
      throw UsageError(std::string("bad element: ") + e.what());
    }
    const int m = a.is_zero() ? o.p.m : a.degree();
    if (m < 0) throw UsageError("element is not homogeneous");
    Options copy = o;
    copy.p.m = m;
    validate(copy);
    const qmatrix::StandardBasis basis(mixedalg::mixed_algebra(n).plain(), m);
    out = {{"kind", "ordinary"}, {"n", n}, {"m", m}, {"coefficients", json::array()}};
    for (const auto& [idx, c] : basis.straighten(a)) {
      json e = coeff_entry(idx, c);
      e["t"] = basis.bitableaux()[idx].t;
      e["t2"] = basis.bitableaux()[idx].t2;
      out["coefficients"].push_back(e);
      csv << idx << "," << csv_field(c.to_string()) << "\n";
    }
  }
  return o.format == "csv" ? csv.str() : out.dump(2) + "\n";
}

std::string cmd_iota(const Options& o, std::istream& in) {
  const json input = read_input(o, in);
  const int n = o.p.n;
  mixedalg::MixedElem a;
  int r = 0;
  int s = 0;
  std::optional<std::size_t> basis_idx;
  if (input.is_object()) {
    mixedalg::RationalBitableau b;
    try {
      b = mixedalg::rational_bitableau_from_json(input);
    } catch (const std::exception& e) {
      throw UsageError(std::string("bad rational bitableau: ") + e.what());
    }
    r = b.k + b.rt.left.size();
    s = b.k + b.rt.right.size();
    check_bidegree(o, r, s);
    const auto& basis = mixedalg::rational_basis(n, r, s);
    basis_idx = basis.index_of(b);
    if (!basis_idx) throw UsageError("rational bitableau is not standard for these parameters");
    a = basis.element(*basis_idx);
  } else {
    if (!input.empty() && !is_mixed_input(input)) throw UsageError("iota expects a mixed element or a rational bitableau");
    a = parse_mixed(input, n);
    std::tie(r, s) = a.degree();
    if (a.is_zero()) std::tie(r, s) = std::pair{o.p.r, o.p.s};
    if (r < 0) throw UsageError("element is not bihomogeneous");
    check_bidegree(o, r, s);
    const auto coeffs = mixedalg::rational_straighten(a, n, r, s);
    if (coeffs.size() == 1 && coeffs[0].second == exactalg::RationalFn(1L)) basis_idx = coeffs[0].first;
  }
  const auto image = mixedalg::iota(a, n, r, s);
  json out = {{"n", n}, {"r", r}, {"s", s}, {"degree", r + (n - 1) * s}, {"image", image}};
  std::ostringstream csv;
  csv << "n,r,s,degree,terms,c,t,t2\n";
  csv << n << "," << r << "," << s << "," << r + (n - 1) * s << "," << image.terms().size() << ",";
  if (basis_idx) {
    const auto& basis = mixedalg::rational_basis(n, r, s);
    const auto& b = basis.bitableaux()[*basis_idx];
    const int c = basis.c_exponent(*basis_idx);
    const auto t = combinat::rational_to_ordinary(b.rt, n, s);
    const auto t2 = combinat::rational_to_ordinary(b.rt2, n, s);
    out["basis_element"] = mixedalg::rational_bitableau_to_json(b);
    out["c"] = c;
    out["t"] = t;
    out["t2"] = t2;
    csv << c << "," << csv_field(rows_str(t)) << "," << csv_field(rows_str(t2)) << "\n";
  } else {
    csv << ",,\n";
  }
  return o.format == "csv" ? csv.str() : out.dump(2) + "\n";
}

// dims / verify ---------------------------------------------------------

std::string cmd_dims(const Options& o, bool& failed) {
  const auto rep = tensorrep::verify_schur_weyl(o.p.n, o.p.r, o.p.s);
  failed = !rep.ok;
  if (o.format == "csv") {
    std::ostringstream csv;
    csv << "n,r,s,commutant_dim,image_dim,rational_bitableaux,coeff_quotient_dim,bicommute,ok,elapsed_ms\n";
    csv << rep.n << "," << rep.r << "," << rep.s << "," << rep.commutant_dim << "," << rep.image_dim << ","
        << rep.rational_bitableaux << "," << rep.coeff_quotient_dim << "," << (rep.bicommute ? "true" : "false") << ","
        << (rep.ok ? "true" : "false") << "," << rep.elapsed_ms << "\n";
    return csv.str();
  }
  return tensorrep::to_json(rep).dump(2) + "\n";
}

std::string cmd_verify(const Options& o, bool& failed) {
  std::vector<std::string> names;
  if (o.suite == "all") {
    names = suite_registry();
  } else if (is_suite(o.suite)) {
    names = {o.suite};
  } else {
    throw UsageError("unknown suite: " + o.suite);
  }
  json out = {{"params", {{"n", o.p.n}, {"r", o.p.r}, {"s", o.p.s}, {"m", o.p.m}}}, {"suites", json::array()}};
  std::ostringstream csv;
  csv << "suite,ok,checks,failures,elapsed_ms\n";
  failed = false;
  for (const auto& name : names) {
    const SuiteResult res = run_suite(name, o.p);
    failed = failed || !res.ok();
    out["suites"].push_back({{"suite", res.name},
                             {"ok", res.ok()},
                             {"checks", res.checks},
                             {"failures", res.failures},
                             {"details", res.details},
                             {"elapsed_ms", res.elapsed_ms}});
    csv << res.name << "," << (res.ok() ? "true" : "false") << "," << res.checks << "," << res.failures << ","
        << res.elapsed_ms << "\n";
  }
  out["ok"] = !failed;
  return o.format == "csv" ? csv.str() : out.dump(2) + "\n";
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--n", o.p.n, "Matrix size n");
  sub->add_option("--r", o.p.r, "Plain degree r");
  sub->add_option("--s", o.p.s, "Dual degree s");
  sub->add_option("--m", o.p.m, "Ordinary degree m");
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--output", o.output, "Write the report to this file");
  sub->add_flag("--unsafe-large", o.unsafe, "Lift the default size caps (n<=3, r,s<=2, m<=4)");
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for the rational q-Schur algebra and mixed tensor space", "qschur"};
  app.require_subcommand(1);
  Options o;

  auto* tableaux = app.add_subcommand("tableaux", "List standard tableaux (--m) or standard rational tableaux (--rational, --r, --s)");
  add_common(tableaux, o);
  tableaux->add_flag("--rational", o.rational, "Standard rational tableaux");

  auto* basis = app.add_subcommand("basis", "Standard bideterminant basis: ord (degree m) or mixed (bidegree r,s)");
  add_common(basis, o);
  basis->add_option("kind", o.basis_kind, "ord or mixed")->required()->check(CLI::IsMember({"ord", "mixed"}));

  auto* straighten = app.add_subcommand("straighten", "Expand a JSON element in the standard (rational) basis");
  add_common(straighten, o);
  straighten->add_option("--input", o.input, "Input JSON file, - for standard input");

  auto* iota = app.add_subcommand("iota", "Apply iota to a mixed element or a rational bitableau");
  add_common(iota, o);
  iota->add_option("--input", o.input, "Input JSON file, - for standard input");

  auto* dims = app.add_subcommand("dims", "Four-way dimension table for (n, r, s)");
  add_common(dims, o);

  auto* verify = app.add_subcommand("verify", "Run a named verification suite, or all");
  add_common(verify, o);
  auto* suite_pos = verify->add_option("name", o.suite, "Suite name or all");
  auto* suite_opt = verify->add_option("--suite", o.suite, "Suite name or all");
  suite_pos->excludes(suite_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    validate(o);
    std::string report;
    bool failed = false;
    if (*tableaux) {
      report = cmd_tableaux(o);
    } else if (*basis) {
      report = cmd_basis(o);
    } else if (*straighten) {
      report = cmd_straighten(o, in);
    } else if (*iota) {
      report = cmd_iota(o, in);
    } else if (*dims) {
      report = cmd_dims(o, failed);
    } else if (*verify) {
      if (o.suite.empty()) throw UsageError("verify needs a suite name; known: all and the registry names");
      report = cmd_verify(o, failed);
    }
    if (o.output.empty()) {
      out << report;
    } else {
      std::ofstream f(o.output);
      if (!f) throw UsageError("cannot write output file " + o.output);
      f << report;
    }
    return failed ? 1 : 0;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace qschur::cli
