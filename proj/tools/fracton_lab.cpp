// fracton-lab: batch front end for the filling-factor classifier and the
// fracton thermodynamics engine. Every run writes one document to standard
// output; identical invocations produce byte-identical documents.
//
// Exit codes: 0 success, 1 fixture or validation failure, 2 usage or domain
// error, 3 numerical non-convergence.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <fracton/fracton.hpp>

namespace {

using fracton::Ratio;

using Cell = std::variant<std::string, double, long long, bool>;

std::string cell_text(const Cell& cell) {
  struct Visitor {
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(double d) const { return fracton::format_real(d); }
    std::string operator()(long long i) const { return std::to_string(i); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
  };
  return std::visit(Visitor{}, cell);
}

nlohmann::ordered_json cell_json(const Cell& cell) {
  struct Visitor {
    nlohmann::ordered_json operator()(const std::string& s) const { return s; }
    nlohmann::ordered_json operator()(double d) const {
      return fracton::round_trip_real(d);
    }
    nlohmann::ordered_json operator()(long long i) const { return i; }
    nlohmann::ordered_json operator()(bool b) const { return b; }
  };
  return std::visit(Visitor{}, cell);
}

struct Document {
  std::vector<std::pair<std::string, Cell>> scalars;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::string> notes;

  void scalar(std::string key, Cell value) {
    scalars.emplace_back(std::move(key), std::move(value));
  }
};

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void emit_human(const Document& doc, std::ostream& os) {
  for (const auto& [key, value] : doc.scalars)
    os << key << " = " << cell_text(value) << "\n";
  if (!doc.columns.empty()) {
    if (!doc.scalars.empty()) os << "\n";
    std::vector<std::size_t> width(doc.columns.size());
    std::vector<std::vector<std::string>> cells;
    cells.reserve(doc.rows.size());
    for (std::size_t c = 0; c < doc.columns.size(); ++c)
      width[c] = doc.columns[c].size();
    for (const auto& row : doc.rows) {
      std::vector<std::string> line;
      line.reserve(row.size());
      for (std::size_t c = 0; c < row.size(); ++c) {
        line.push_back(cell_text(row[c]));
        width[c] = std::max(width[c], line.back().size());
      }
      cells.push_back(std::move(line));
    }
    const auto pad = [&](const std::string& text, std::size_t c) {
      os << text;
      if (c + 1 < doc.columns.size())
        os << std::string(width[c] - text.size() + 2, ' ');
    };
    for (std::size_t c = 0; c < doc.columns.size(); ++c)
      pad(doc.columns[c], c);
    os << "\n";
    for (const auto& line : cells) {
      for (std::size_t c = 0; c < line.size(); ++c) pad(line[c], c);
      os << "\n";
    }
  }
  if (!doc.notes.empty()) {
    os << "\n";
    for (const auto& note : doc.notes) os << note << "\n";
  }
}

void emit_csv(const Document& doc, std::ostream& os) {
  if (doc.columns.empty()) {
    os << "key,value\n";
    for (const auto& [key, value] : doc.scalars)
      os << csv_escape(key) << "," << csv_escape(cell_text(value)) << "\n";
  } else {
    for (const auto& [key, value] : doc.scalars)
      os << "# " << key << " = " << cell_text(value) << "\n";
    for (std::size_t c = 0; c < doc.columns.size(); ++c)
      os << (c ? "," : "") << csv_escape(doc.columns[c]);
    os << "\n";
    for (const auto& row : doc.rows) {
      for (std::size_t c = 0; c < row.size(); ++c)
        os << (c ? "," : "") << csv_escape(cell_text(row[c]));
      os << "\n";
    }
  }
  for (const auto& note : doc.notes) os << "# " << note << "\n";
}

void emit_json(const Document& doc, std::ostream& os) {
  nlohmann::ordered_json root;
  for (const auto& [key, value] : doc.scalars) root[key] = cell_json(value);
  if (!doc.columns.empty()) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : doc.rows) {
      nlohmann::ordered_json obj;
      for (std::size_t c = 0; c < row.size() && c < doc.columns.size(); ++c)
        obj[doc.columns[c]] = cell_json(row[c]);
      rows.push_back(std::move(obj));
    }
    root["rows"] = std::move(rows);
  }
  if (!doc.notes.empty()) root["notes"] = doc.notes;
  os << root.dump(1) << "\n";
}

void emit(const Document& doc, const std::string& format, std::ostream& os) {
  if (format == "json")
    emit_json(doc, os);
  else if (format == "csv")
    emit_csv(doc, os);
  else
    emit_human(doc, os);
}

/// Accepts either a decimal literal or an exact "p/q".
double parse_real(const std::string& text) {
  if (text.find('/') != std::string::npos)
    return Ratio::parse(text).to_double();
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size())
    throw fracton::domain_error("malformed number '" + text + "'");
  return v;
}

struct Settings {
  std::string format = "human";
  double tol = 1e-9;
  int count = 4;
  std::string fixtures;
  int exit_code = 0;
};

void add_format(CLI::App* cmd, Settings& s) {
  cmd->add_option("--format", s.format, "Output format")
      ->check(CLI::IsMember({"human", "json", "csv"}));
}

void members_rows(Document& doc, const std::vector<Ratio>& members,
                  const std::vector<Ratio>& spins) {
  doc.columns = {"member", "spin"};
  for (std::size_t i = 0; i < members.size(); ++i)
    doc.rows.push_back({members[i].str(), spins[i].str()});
}

/// Members of the border classes h=1 (odd levels) and h=2 (even levels),
/// where the interior generation rule degenerates.
void border_members(Document& doc, const Ratio& h, int count) {
  std::vector<Ratio> members, spins;
  for (int i = 0; i < count; ++i) {
    members.push_back(h + Ratio(2 * i));
    spins.push_back(members.back() / Ratio(2));
  }
  members_rows(doc, members, spins);
}

void cmd_classify(const std::string& nu_text, const Settings& s, Document& doc) {
  const Ratio nu = Ratio::parse(nu_text);
  const Ratio h = fracton::spectrum_h(nu);
  doc.scalar("nu", nu.str());
  doc.scalar("h", h.str());
  doc.scalar("dual_h", fracton::dual_class(h).str());
  if (nu.is_integer()) {
    doc.scalar("border_class",
               std::string(h == Ratio(1) ? "fermion (odd levels)"
                                         : "boson (even levels)"));
    border_members(doc, h, s.count);
  } else {
    const fracton::DualPair dual = fracton::dual_filling(nu);
    doc.scalar("dual_nu", dual.nu_dual.str());
    const fracton::UniversalClass uc = fracton::class_members(h, s.count);
    members_rows(doc, uc.members, uc.spins);
  }
}

void cmd_class_members(const std::string& h_text, const Settings& s,
                       Document& doc) {
  const Ratio h = Ratio::parse(h_text);
  const fracton::UniversalClass uc = fracton::class_members(h, s.count);
  doc.scalar("h", h.str());
  doc.scalar("dual_h", fracton::dual_class(h).str());
  members_rows(doc, uc.members, uc.spins);
}

void cmd_dual(const std::string& x_text, Document& doc) {
  const Ratio x = Ratio::parse(x_text);
  doc.scalar("x", x.str());
  bool any = false;
  if (Ratio(1) <= x && x <= Ratio(2)) {
    doc.scalar("dual_class", fracton::dual_class(x).str());
    any = true;
  }
  if (!x.is_integer() && x > Ratio(0)) {
    const fracton::DualPair dual = fracton::dual_filling(x);
    doc.scalar("dual_filling", dual.nu_dual.str());
    doc.scalar("h", dual.h.str());
    doc.scalar("dual_filling_h", dual.h_dual.str());
    any = true;
  }
  if (!any)
    throw fracton::domain_error(
        "no duality applies to " + x.str() +
        ": it is neither a dimension in [1,2] nor a non-integer filling "
        "factor");
}

void cmd_farey(int order, Document& doc) {
  const std::vector<Ratio> seq = fracton::farey_sequence(order);
  doc.scalar("order", static_cast<long long>(order));
  doc.scalar("size", static_cast<long long>(seq.size()));
  doc.columns = {"index", "nu"};
  for (std::size_t i = 0; i < seq.size(); ++i)
    doc.rows.push_back({static_cast<long long>(i), seq[i].str()});
}

void chain_document(const fracton::ChainFixture& fixture, Document& doc,
                    Settings& s) {
  const fracton::FixtureOutcome outcome =
      fracton::validate_chain_fixture(fixture);
  const fracton::TransitionChain chain =
      fracton::validate_chain(fixture.entries);
  doc.scalar("name", fixture.name);
  doc.scalar("entries", static_cast<long long>(fixture.entries.size()));
  doc.scalar("pairs", static_cast<long long>(chain.verdicts.size()));
  doc.scalar("valid", chain.valid());
  doc.scalar("expect_valid", fixture.expect_valid);
  doc.scalar("failures", static_cast<long long>(outcome.failures));
  doc.scalar("annotated", static_cast<long long>(outcome.annotated));
  doc.columns = {"index", "from", "to", "from_h", "to_h", "det", "unimodular"};
  for (std::size_t i = 0; i + 1 < chain.entries.size(); ++i) {
    doc.rows.push_back(
        {static_cast<long long>(i), chain.entries[i].str(),
         chain.entries[i + 1].str(), chain.spectra[i].str(),
         chain.spectra[i + 1].str(),
         fracton::unimodular_det(chain.entries[i], chain.entries[i + 1]).str(),
         static_cast<bool>(chain.verdicts[i])});
  }
  for (const std::string& detail : outcome.details) doc.notes.push_back(detail);
  if (!outcome.pass) s.exit_code = 1;
}

void cmd_validate_chain(const std::vector<std::string>& entries, Settings& s,
                        Document& doc) {
  fracton::ChainFixture fixture;
  if (!s.fixtures.empty()) {
    if (!entries.empty())
      throw fracton::domain_error(
          "give either chain entries or --fixtures, not both");
    fixture = fracton::load_chain_fixture(s.fixtures);
  } else {
    fixture.name = "command-line chain";
    fixture.expect_valid = true;
    for (const std::string& text : entries)
      fixture.entries.push_back(Ratio::parse(text));
  }
  chain_document(fixture, doc, s);
}

void cmd_theorem_check(int order, Settings& s, Document& doc) {
  const fracton::FareyTheoremReport report = fracton::farey_theorem_check(order);
  doc.scalar("order", static_cast<long long>(order));
  doc.scalar("checked", static_cast<long long>(report.entries.size()));
  long long failures = 0;
  doc.columns = {"nu", "h", "first_member", "second_member", "pass"};
  for (const fracton::FareyTheoremEntry& entry : report.entries) {
    const fracton::UniversalClass uc = fracton::class_members(entry.h, 2);
    doc.rows.push_back({entry.nu.str(), entry.h.str(), uc.members[0].str(),
                        uc.members[1].str(), entry.pass});
    if (!entry.pass) ++failures;
  }
  doc.scalar("failures", failures);
  doc.scalar("all_pass", report.all_pass);
  if (!report.all_pass) s.exit_code = 1;
}

void cmd_occupation(const std::string& h_text, const std::string& xi_text,
                    Document& doc) {
  const fracton::ThermoPoint point =
      fracton::thermo_point(parse_real(h_text), parse_real(xi_text));
  doc.scalar("h", point.h);
  doc.scalar("xi", point.xi);
  doc.scalar("Y", point.Y);
  doc.scalar("n", point.n);
  doc.scalar("theta", point.theta);
  doc.scalar("entropy_per_state", point.entropy_per_state);
}

void cmd_entropy(const std::string& h_text, const std::string& n_text,
                 Document& doc) {
  const double h = parse_real(h_text);
  const double n = parse_real(n_text);
  doc.scalar("h", h);
  doc.scalar("n", n);
  doc.scalar("entropy_per_state", fracton::entropy_per_state(h, n));
}

void cmd_free_energy(const std::string& h_text, const std::string& xi_text,
                     const std::string& kT_text, Document& doc) {
  const double h = parse_real(h_text);
  const double xi = parse_real(xi_text);
  const double kT = parse_real(kT_text);
  doc.scalar("h", h);
  doc.scalar("xi", xi);
  doc.scalar("kT", kT);
  doc.scalar("theta", fracton::partition_theta(h, xi));
  doc.scalar("free_energy", fracton::free_energy(h, xi, kT));
}

void cmd_fractal_index(const std::string& h_text, const Settings& s,
                       Document& doc) {
  const fracton::FractalIndex index =
      fracton::fractal_index(parse_real(h_text), s.tol);
  doc.scalar("h", index.h);
  doc.scalar("fractal_index", index.value);
  doc.scalar("abs_error_estimate", index.abs_error_estimate);
}

void central_charge_row(Document& doc, const fracton::CentralCharge& charge) {
  doc.rows.push_back({static_cast<long long>(charge.nu), charge.x_root,
                      charge.value_dilog,
                      charge.value_index ? Cell(*charge.value_index)
                                         : Cell(std::string("n/a"))});
}

void cmd_central_charge(std::optional<int> nu, std::optional<int> upto,
                        const Settings& s, Document& doc) {
  if (upto) {
    if (*upto < 1)
      throw fracton::domain_error("--count must be at least 1");
    doc.columns = {"nu", "x_root", "c_dilog", "c_index"};
    for (int k = 1; k <= *upto; ++k)
      central_charge_row(doc, fracton::central_charge_index(k, s.tol));
    return;
  }
  if (!nu)
    throw fracton::domain_error("give a level nu or --count N");
  const fracton::CentralCharge charge =
      *nu >= 1 ? fracton::central_charge_index(*nu, s.tol)
               : fracton::central_charge_dilog(*nu);
  doc.scalar("nu", static_cast<long long>(charge.nu));
  doc.scalar("x_root", charge.x_root);
  doc.scalar("c_dilog", charge.value_dilog);
  if (charge.value_index) doc.scalar("c_index", *charge.value_index);
}

void cmd_table(const std::string& kind, const std::string& h_text,
               const std::string& grid_text, const Settings& s, Document& doc) {
  if (grid_text.empty())
    throw fracton::domain_error("table needs --grid lo:hi:n[:log]");
  const fracton::GridSpec grid = fracton::parse_grid(grid_text);
  const std::vector<double> points = fracton::make_grid(grid);
  doc.scalar("kind", kind);
  doc.scalar("grid", grid_text);
  if (kind == "occupation" || kind == "entropy") {
    if (h_text.empty())
      throw fracton::domain_error("table " + kind + " needs a class dimension h");
    const double h = parse_real(h_text);
    doc.scalar("h", h);
    doc.columns = {"xi", "Y", "n", "theta", "entropy_per_state"};
    for (double xi : points) {
      const fracton::ThermoPoint point = fracton::thermo_point(h, xi);
      doc.rows.push_back(
          {point.xi, point.Y, point.n, point.theta, point.entropy_per_state});
    }
  } else if (kind == "index") {
    if (!h_text.empty())
      throw fracton::domain_error(
          "table index sweeps h through --grid; drop the positional h");
    doc.columns = {"h", "fractal_index", "abs_error_estimate"};
    for (double h : points) {
      const fracton::FractalIndex index = fracton::fractal_index(h, s.tol);
      doc.rows.push_back({index.h, index.value, index.abs_error_estimate});
    }
  } else {
    throw fracton::domain_error("unknown table kind '" + kind +
                                "' (occupation, entropy or index)");
  }
}

void cmd_validate_fixtures(Settings& s, Document& doc) {
  const std::string path =
      s.fixtures.empty() ? std::string(FRACTON_DEFAULT_FIXTURES) : s.fixtures;
  const fracton::FixtureSet set = fracton::load_fixture_set(path);
  const fracton::FixtureReport report = fracton::validate_fixtures(set);
  doc.scalar("file", path);
  doc.scalar("name", set.name);
  doc.scalar("version", static_cast<long long>(set.version));
  doc.scalar("fixtures", static_cast<long long>(report.outcomes.size()));
  doc.scalar("checks", static_cast<long long>(report.total_checks));
  doc.scalar("failures", static_cast<long long>(report.total_failures));
  doc.scalar("annotated", static_cast<long long>(report.total_annotated));
  doc.scalar("ok", report.ok);
  doc.columns = {"fixture", "kind",      "checks", "failures",
                 "annotated", "expect_valid", "pass"};
  for (const fracton::FixtureOutcome& outcome : report.outcomes) {
    doc.rows.push_back({outcome.name, outcome.kind,
                        static_cast<long long>(outcome.checks),
                        static_cast<long long>(outcome.failures),
                        static_cast<long long>(outcome.annotated),
                        outcome.expect_valid, outcome.pass});
    for (const std::string& detail : outcome.details)
      doc.notes.push_back(outcome.name + ": " + detail);
  }
  if (!report.ok) s.exit_code = 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "fracton-lab: quantum Hall filling-factor classification and fracton "
      "thermodynamics"};
  // Long-form help only; the short -h would shadow the h positionals.
  app.set_help_flag("--help", "Print usage");
  app.require_subcommand(1);

  Settings settings;
  Document doc;

  std::string arg_nu, arg_h, arg_xi, arg_n, arg_kT, arg_kind, arg_grid;
  std::vector<std::string> arg_entries;
  int arg_order = 1;
  std::optional<int> arg_level, arg_upto;

  CLI::App* classify = app.add_subcommand("classify", "Class of a filling factor");
  classify->add_option("nu", arg_nu, "Filling factor p/q")->required();
  classify->add_option("--count", settings.count, "Members to list");
  add_format(classify, settings);
  classify->callback([&] { cmd_classify(arg_nu, settings, doc); });

  CLI::App* members = app.add_subcommand("class-members", "Filling factors of a class");
  members->add_option("h", arg_h, "Class dimension p/q in (1,2)")->required();
  members->add_option("--count", settings.count, "Members to list");
  add_format(members, settings);
  members->callback([&] { cmd_class_members(arg_h, settings, doc); });

  CLI::App* dual = app.add_subcommand("dual", "Duality partners of a value");
  dual->add_option("x", arg_nu, "Dimension in [1,2] or filling factor")->required();
  add_format(dual, settings);
  dual->callback([&] { cmd_dual(arg_nu, doc); });

  CLI::App* farey = app.add_subcommand("farey", "Farey sequence of an order");
  farey->add_option("n", arg_order, "Order")->required();
  add_format(farey, settings);
  farey->callback([&] { cmd_farey(arg_order, doc); });

  CLI::App* chain = app.add_subcommand(
      "validate-chain", "Unimodularity verdicts for a transition chain");
  chain->add_option("entries", arg_entries, "Chain entries p/q");
  chain->add_option("--fixtures", settings.fixtures, "Chain fixture file");
  add_format(chain, settings);
  chain->callback([&] { cmd_validate_chain(arg_entries, settings, doc); });

  CLI::App* theorem = app.add_subcommand(
      "theorem-check", "Interior Farey fractions start their own classes");
  theorem->add_option("n", arg_order, "Order")->required();
  add_format(theorem, settings);
  theorem->callback([&] { cmd_theorem_check(arg_order, settings, doc); });

  CLI::App* occupation = app.add_subcommand("occupation", "Solved state at (h, xi)");
  occupation->add_option("h", arg_h, "Class dimension in [1,2]")->required();
  occupation->add_option("xi", arg_xi, "Fugacity > 0")->required();
  add_format(occupation, settings);
  occupation->callback([&] { cmd_occupation(arg_h, arg_xi, doc); });

  CLI::App* entropy = app.add_subcommand("entropy", "Entropy per state at (h, n)");
  entropy->add_option("h", arg_h, "Class dimension in [1,2]")->required();
  entropy->add_option("n", arg_n, "Occupation")->required();
  add_format(entropy, settings);
  entropy->callback([&] { cmd_entropy(arg_h, arg_n, doc); });

  CLI::App* free_energy =
      app.add_subcommand("free-energy", "Free energy per state at (h, xi, kT)");
  free_energy->add_option("h", arg_h, "Class dimension in [1,2]")->required();
  free_energy->add_option("xi", arg_xi, "Fugacity > 0")->required();
  free_energy->add_option("kT", arg_kT, "Temperature scale > 0")->required();
  add_format(free_energy, settings);
  free_energy->callback([&] { cmd_free_energy(arg_h, arg_xi, arg_kT, doc); });

  CLI::App* index = app.add_subcommand("fractal-index", "Topological index of a class");
  index->add_option("h", arg_h, "Class dimension in [1,2]")->required();
  index->add_option("--tol", settings.tol, "Quadrature tolerance");
  add_format(index, settings);
  index->callback([&] { cmd_fractal_index(arg_h, settings, doc); });

  CLI::App* charge = app.add_subcommand(
      "central-charge", "Central charge by the dilogarithm and index routes");
  charge->add_option("nu", arg_level, "Level nu >= 0");
  charge->add_option("--count", arg_upto, "Tabulate levels 1..N side by side");
  charge->add_option("--tol", settings.tol, "Quadrature tolerance");
  add_format(charge, settings);
  charge->callback([&] { cmd_central_charge(arg_level, arg_upto, settings, doc); });

  CLI::App* table = app.add_subcommand("table", "Tabulate a quantity over a grid");
  table->add_option("kind", arg_kind, "occupation, entropy or index")->required();
  table->add_option("h", arg_h, "Class dimension (occupation/entropy tables)");
  table->add_option("--grid", arg_grid, "lo:hi:n[:log]");
  table->add_option("--tol", settings.tol, "Quadrature tolerance");
  add_format(table, settings);
  table->callback([&] { cmd_table(arg_kind, arg_h, arg_grid, settings, doc); });

  CLI::App* fixtures = app.add_subcommand(
      "validate-fixtures", "Validate the shipped or a user fixture set");
  fixtures->add_option("--fixtures", settings.fixtures, "Fixture set file");
  add_format(fixtures, settings);
  fixtures->callback([&] { cmd_validate_fixtures(settings, doc); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const fracton::convergence_error& e) {
    std::cerr << "error: " << e.what()
              << " (achieved error " << fracton::format_real(e.achieved_error())
              << ")\n";
    return 3;
  } catch (const fracton::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  emit(doc, settings.format, std::cout);
  return settings.exit_code;
}
