// Command-line front end: operator tables, multiplication table, molecule
// classification, projection enumeration, building-up traces, quantum
// residuals, and the self-verification report.
//
// Exit codes: 0 success / all checks PASS, 1 any check FAIL, 2 usage or
// input errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chiral/aufbau.hpp"
#include "chiral/classify.hpp"
#include "chiral/emit.hpp"
#include "chiral/molfile.hpp"
#include "chiral/operators.hpp"
#include "chiral/quantum.hpp"
#include "chiral/verify.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw chiral::StructureError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string fmt_residual(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string chi_line(const chiral::ChiralityIndex& idx) {
  return "chi = {" + std::to_string(idx.n) + ", " + std::to_string(idx.p) +
         "}  " + chiral::to_string(chiral::classify(idx));
}

int run_verify(const std::string& scope,
               const std::vector<std::vector<chiral::CheckResult>>& groups) {
  std::cout << "verify: scope =" << scope << "\n";
  int failures = 0, total = 0;
  for (const auto& group : groups)
    for (const chiral::CheckResult& c : group) {
      ++total;
      if (!c.passed) ++failures;
      std::cout << (c.passed ? "PASS " : "FAIL ") << c.name;
      if (!c.detail.empty()) std::cout << ": " << c.detail;
      std::cout << "\n";
    }
  std::cout << "verify: " << total << " checks, " << failures << " failures\n";
  return failures == 0 ? 0 : 1;
}

struct Options {
  std::string tables_kind = "all", tables_format = "ascii";
  std::string cayley_format = "ascii";
  bool v_all = false, v_closure = false, v_eigen = false;
  bool v_commutators = false, v_quantum = false;
  std::string classify_file;
  std::string project_file, project_centre;
  std::string aufbau_start, aufbau_deltas;
  int radial_l = 0;
  double radial_e = 0.0, radial_r0 = 1.0;
  int radial_samples = 1001;
  int azim_m = 0, azim_samples = 4001;
};

int dispatch(const CLI::App& app, const Options& opt) {
  using namespace chiral;

  if (app.got_subcommand("tables")) {
    std::optional<Kind> kind;
    if (opt.tables_kind == "rot") kind = Kind::Rotation;
    else if (opt.tables_kind == "inv") kind = Kind::Inversion;
    std::cout << render_tables(kind, opt.tables_format == "csv");
    return 0;
  }

  if (app.got_subcommand("cayley")) {
    std::cout << (opt.cayley_format == "csv" ? csv_cayley() : ascii_cayley());
    return 0;
  }

  if (app.got_subcommand("verify")) {
    const bool any = opt.v_closure || opt.v_eigen || opt.v_commutators ||
                     opt.v_quantum;
    std::vector<std::vector<CheckResult>> groups;
    std::string scope;
    if (opt.v_all || !any) {
      groups.push_back(verify_all());
      scope = " closure eigen commutators quantum chains";
    } else {
      if (opt.v_closure) {
        groups.push_back(verify_closure());
        scope += " closure";
      }
      if (opt.v_eigen) {
        groups.push_back(verify_eigen());
        scope += " eigen";
      }
      if (opt.v_commutators) {
        groups.push_back(verify_commutators());
        scope += " commutators";
      }
      if (opt.v_quantum) {
        groups.push_back(verify_quantum());
        scope += " quantum";
      }
    }
    return run_verify(scope, groups);
  }

  if (app.got_subcommand("classify")) {
    const ChainMolecule mol = parse_molecule(read_file(opt.classify_file));
    std::cout << chi_line(chirality_index(mol)) << "\n";
    return 0;
  }

  if (app.got_subcommand("project")) {
    const ChainMolecule mol = parse_molecule(read_file(opt.project_file));
    const Tetrahedron* centre = nullptr;
    for (const Tetrahedron& t : mol.centres)
      if (t.centre_id == opt.project_centre) centre = &t;
    if (!centre)
      throw StructureError("no centre '" + opt.project_centre + "' in '" +
                           mol.name + "'");
    const ProjectionSet set = enumerate_projections(*centre);
    std::cout << "molecule " << mol.name << ", center " << centre->centre_id
              << "\n";
    for (const Projection& pr : set.entries) {
      std::cout << pr.op.name() << ":";
      for (const Slot& s : pr.image.slots) std::cout << " " << slot_token(s);
      std::cout << "  orbit " << pr.orbit + 1 << "\n";
    }
    std::cout << "distinct projections: " << set.distinct_count << "\n";
    std::cout << "orbits: " << set.orbit_count() << " (sizes:";
    for (int s : set.orbit_sizes) std::cout << " " << s;
    std::cout << ")\n";
    return 0;
  }

  if (app.got_subcommand("aufbau")) {
    int n = 0, p = 0;
    if (std::sscanf(opt.aufbau_start.c_str(), "%d,%d", &n, &p) != 2)
      throw std::invalid_argument("--start expects n,p");
    std::vector<AufbauStep> steps;
    std::stringstream ss(opt.aufbau_deltas);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) steps.emplace_back(std::stoi(item));
    const AufbauTrace trace = aufbau_sequence(ChiralityIndex{n, p}, steps);
    std::cout << "start: " << chi_line(trace.start) << "\n";
    for (std::size_t j = 0; j < trace.states.size(); ++j)
      std::cout << "step " << j + 1 << " (dp=" << trace.steps[j].delta_p
                << "): " << chi_line(trace.states[j]) << "\n";
    std::cout << "final: " << chi_line(trace.final_state()) << "\n";
    return 0;
  }

  const CLI::App* quantum = app.get_subcommand("quantum");
  if (quantum->parsed()) {
    if (quantum->got_subcommand("radial")) {
      const RadialProblem prob{opt.radial_l, opt.radial_e, opt.radial_r0};
      const double res = radial_residual(prob, 0.5, 5.0, opt.radial_samples);
      std::cout << "radial: l=" << opt.radial_l << " E=" << opt.radial_e
                << " r0=" << opt.radial_r0 << " samples=" << opt.radial_samples
                << " alpha0=" << alpha0(prob)
                << " max-residual=" << fmt_residual(res) << "\n";
      return 0;
    }
    if (quantum->got_subcommand("azimuthal")) {
      const double res =
          azimuthal_residual(AzimuthalProblem{opt.azim_m}, opt.azim_samples);
      std::cout << "azimuthal: m=" << opt.azim_m
                << " samples=" << opt.azim_samples
                << " max-residual=" << fmt_residual(res) << "\n";
      return 0;
    }
  }

  std::cerr << "no command given (try --help)\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"algebra of tetrahedral stereocentres: operator tables, "
               "chirality classification, building-up rules, quantum checks"};
  app.require_subcommand(0, 1);
  Options opt;

  CLI::App* tables = app.add_subcommand("tables", "print the 24 operator matrices");
  tables->add_option("--kind", opt.tables_kind, "rot | inv | all")
      ->check(CLI::IsMember({"rot", "inv", "all"}));
  tables->add_option("--format", opt.tables_format, "ascii | csv")
      ->check(CLI::IsMember({"ascii", "csv"}));

  CLI::App* cayley = app.add_subcommand("cayley", "print the 24x24 product table");
  cayley->add_option("--format", opt.cayley_format, "ascii | csv")
      ->check(CLI::IsMember({"ascii", "csv"}));

  CLI::App* verify = app.add_subcommand("verify", "run self-verification checks");
  verify->add_flag("--all", opt.v_all, "every check group (default)");
  verify->add_flag("--closure", opt.v_closure, "group structure checks");
  verify->add_flag("--eigen", opt.v_eigen, "spectral checks");
  verify->add_flag("--commutators", opt.v_commutators, "commutator checks");
  verify->add_flag("--quantum", opt.v_quantum, "residual and parity checks");

  CLI::App* classify = app.add_subcommand("classify", "chirality index of a molecule file");
  classify->add_option("file", opt.classify_file, "molecule file")->required();

  CLI::App* project = app.add_subcommand("project", "enumerate the 24 projections of one centre");
  project->add_option("file", opt.project_file, "molecule file")->required();
  project->add_option("--center", opt.project_centre, "centre id")->required();

  CLI::App* aufbau = app.add_subcommand("aufbau", "iterate building-up steps on a chirality index");
  aufbau->add_option("--start", opt.aufbau_start, "start index as n,p")->required();
  aufbau->add_option("--deltas", opt.aufbau_deltas, "comma list of 0/1 steps");

  CLI::App* quantum = app.add_subcommand("quantum", "residual checks of the bond representation");
  quantum->require_subcommand(1);
  CLI::App* radial = quantum->add_subcommand("radial", "radial equation residual on [0.5, 5]");
  radial->add_option("--l", opt.radial_l, "orbital quantum number")->required();
  radial->add_option("--E", opt.radial_e, "energy eigenvalue")->required();
  radial->add_option("--r0", opt.radial_r0, "normalization length");
  radial->add_option("--samples", opt.radial_samples, "grid points");
  CLI::App* azim = quantum->add_subcommand("azimuthal", "azimuthal equation residual on [0, 2pi)");
  azim->add_option("--m", opt.azim_m, "azimuthal quantum number")->required();
  azim->add_option("--samples", opt.azim_samples, "grid points");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    return dispatch(app, opt);
  } catch (const chiral::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const chiral::StructureError& e) {
    std::cerr << "structure error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
