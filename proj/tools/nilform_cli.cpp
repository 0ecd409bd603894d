#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "nilform/cohomology.hpp"
#include "nilform/errors.hpp"
#include "nilform/group.hpp"
#include "nilform/io.hpp"
#include "nilform/reconstruction.hpp"
#include "nilform/selftest.hpp"
#include "nilform/torus.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw nilform::MalformedDocument("cannot open " + path);
  buf << in.rdbuf();
  return buf.str();
}

nilform::SkewTriple load_triple(const std::string& path) {
  return nilform::parse_triple(slurp(path));
}

std::string center_json(const nilform::SkewTriple& t) {
  nilform::Sublattice c = nilform::center_basis(t);
  const nilform::IntMatrix& b = c.basis();
  std::string out = "{\"basis\":[";
  for (int j = 0; j < b.cols(); ++j) {
    if (j) out += ",";
    out += "[";
    for (int i = 0; i < b.rows(); ++i) {
      if (i) out += ",";
      out += b(i, j).get_str();
    }
    out += "]";
  }
  out += "],\"rank\":" + std::to_string(c.rank()) + "}";
  return out;
}

std::string fiber_json(const nilform::FiberForm& f) {
  std::string out = "{\"entries\":[";
  for (int i = 0; i < f.n; ++i) {
    if (i) out += ",";
    out += "[";
    for (int j = 0; j < f.n; ++j) {
      if (j) out += ",";
      out += "\"" + nilform::emit_rational(f(i, j)) + "\"";
    }
    out += "]";
  }
  out += "],\"n\":" + std::to_string(f.n) + "}";
  return out;
}

nilform::Character parse_character(const std::string& text, int m) {
  std::vector<nilform::Rat> coords = nilform::parse_rational_list(text);
  if (static_cast<int>(coords.size()) != m)
    throw nilform::DimensionMismatch("character needs exactly " +
                                     std::to_string(m) + " coordinates");
  return nilform::Character(coords);
}

std::string format_residual(double r) {
  std::ostringstream out;
  out.setf(std::ios::scientific);
  out.precision(3);
  out << r;
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"calculator for integer skew-form presentations of finitely "
               "generated torsion-free class-two nilpotent groups"};
  app.require_subcommand(1);
  int rc = 0;

  auto* c_validate = app.add_subcommand(
      "validate", "parse a presentation and report its ranks");
  std::string validate_file;
  c_validate->add_option("file", validate_file, "presentation JSON, or - for stdin")
      ->required();
  c_validate->callback([&] {
    nilform::SkewTriple t = load_triple(validate_file);
    std::cout << "ok m=" << t.m << " n=" << t.n << "\n";
  });

  auto* c_mul = app.add_subcommand("mul", "multiply two group elements");
  std::string mul_file, mul_x, mul_y;
  c_mul->add_option("file", mul_file, "presentation JSON, or - for stdin")->required();
  c_mul->add_option("x", mul_x, "left factor, written a1,..,am;b1,..,bn")->required();
  c_mul->add_option("y", mul_y, "right factor")->required();
  c_mul->callback([&] {
    nilform::SkewTriple t = load_triple(mul_file);
    std::cout << nilform::emit_element(nilform::multiply(
                     t, nilform::parse_element(mul_x, t),
                     nilform::parse_element(mul_y, t)))
              << "\n";
  });

  auto* c_inv = app.add_subcommand("inv", "invert a group element");
  std::string inv_file, inv_x;
  c_inv->add_option("file", inv_file, "presentation JSON, or - for stdin")->required();
  c_inv->add_option("x", inv_x, "element, written a1,..,am;b1,..,bn")->required();
  c_inv->callback([&] {
    nilform::SkewTriple t = load_triple(inv_file);
    std::cout << nilform::emit_element(
                     nilform::inverse(t, nilform::parse_element(inv_x, t)))
              << "\n";
  });

  auto* c_comm = app.add_subcommand("comm", "commutator of two group elements");
  std::string comm_file, comm_x, comm_y;
  c_comm->add_option("file", comm_file, "presentation JSON, or - for stdin")->required();
  c_comm->add_option("x", comm_x, "first element")->required();
  c_comm->add_option("y", comm_y, "second element")->required();
  c_comm->callback([&] {
    nilform::SkewTriple t = load_triple(comm_file);
    std::cout << nilform::emit_element(nilform::commutator(
                     t, nilform::parse_element(comm_x, t),
                     nilform::parse_element(comm_y, t)))
              << "\n";
  });

  auto* c_center = app.add_subcommand("center", "basis of the center");
  std::string center_file;
  c_center->add_option("file", center_file, "presentation JSON, or - for stdin")
      ->required();
  c_center->callback([&] {
    std::cout << center_json(load_triple(center_file)) << "\n";
  });

  auto* c_ucs = app.add_subcommand(
      "ucs", "ranks of the ascending central series subquotients");
  std::string ucs_file;
  c_ucs->add_option("file", ucs_file, "presentation JSON, or - for stdin")->required();
  c_ucs->callback([&] {
    std::vector<int> ranks = nilform::upper_central_series(load_triple(ucs_file));
    std::cout << "[";
    for (std::size_t i = 0; i < ranks.size(); ++i)
      std::cout << (i ? "," : "") << ranks[i];
    std::cout << "]\n";
  });

  auto* c_class = app.add_subcommand("class", "nilpotency class");
  std::string class_file;
  c_class->add_option("file", class_file, "presentation JSON, or - for stdin")
      ->required();
  c_class->callback([&] {
    std::cout << nilform::nilpotency_class(load_triple(class_file)) << "\n";
  });

  auto* c_canon = app.add_subcommand(
      "canon", "split off the radical and rewrite in reduced coordinates");
  std::string canon_file;
  c_canon->add_option("file", canon_file, "presentation JSON, or - for stdin")
      ->required();
  c_canon->callback([&] {
    std::cout << nilform::emit_triple(nilform::canonical_triple(
                     load_triple(canon_file)))
              << "\n";
  });

  auto* c_iso = app.add_subcommand(
      "iso", "decide equivalence of two presentations; exit 0 equivalent, 1 "
             "not equivalent, 2 undecided");
  std::string iso_file1, iso_file2;
  int iso_budget = 2;
  c_iso->add_option("first", iso_file1, "presentation JSON, or - for stdin")
      ->required();
  c_iso->add_option("second", iso_file2, "presentation JSON")->required();
  c_iso->add_option("--budget", iso_budget, "search depth per side")
      ->check(CLI::NonNegativeNumber);
  c_iso->callback([&] {
    nilform::SkewTriple t1 = load_triple(iso_file1);
    nilform::SkewTriple t2 = load_triple(iso_file2);
    nilform::EquivalenceVerdict v =
        nilform::triples_equivalent(t1, t2, iso_budget);
    switch (v.tag) {
      case nilform::VerdictTag::Equivalent:
        std::cout << "equivalent\n";
        std::cout << "phi_a=" << v.witness->first.to_string() << "\n";
        std::cout << "phi_b=" << v.witness->second.to_string() << "\n";
        rc = 0;
        break;
      case nilform::VerdictTag::NotEquivalent:
        std::cout << "not-equivalent " << v.obstruction << "\n";
        rc = 1;
        break;
      case nilform::VerdictTag::Unknown:
        std::cout << "unknown\n";
        rc = 2;
        break;
    }
  });

  auto* c_fiber = app.add_subcommand(
      "fiber", "evaluate the rotation angles over one torus character");
  std::string fiber_file, fiber_chi;
  c_fiber->add_option("file", fiber_file, "presentation JSON, or - for stdin")
      ->required();
  c_fiber->add_option("--chi", fiber_chi, "character, m comma-separated rationals")
      ->required();
  c_fiber->callback([&] {
    nilform::SkewTriple t = load_triple(fiber_file);
    std::cout << fiber_json(nilform::fiber_form(
                     t, parse_character(fiber_chi, t.m)))
              << "\n";
  });

  auto* c_pairing = app.add_subcommand(
      "pairing", "trace pairing of two degree-one classes at a character");
  std::string pairing_file, pairing_chi, pairing_b1, pairing_b2;
  c_pairing->add_option("file", pairing_file, "presentation JSON, or - for stdin")
      ->required();
  c_pairing->add_option("--chi", pairing_chi, "character, m comma-separated rationals")
      ->required();
  c_pairing->add_option("--b1", pairing_b1, "first class, n comma-separated integers")
      ->required();
  c_pairing->add_option("--b2", pairing_b2, "second class, n comma-separated integers")
      ->required();
  c_pairing->callback([&] {
    nilform::SkewTriple t = load_triple(pairing_file);
    nilform::Rat value = nilform::trace_pairing(
        t, parse_character(pairing_chi, t.m),
        nilform::parse_int_vector(pairing_b1, t.n),
        nilform::parse_int_vector(pairing_b2, t.n));
    std::cout << nilform::emit_rational(value) << "\n";
  });

  auto* c_rec = app.add_subcommand(
      "reconstruct", "rebuild the forms from pairing data alone");
  std::string rec_file, rec_noise;
  std::uint64_t rec_seed = 0;
  double rec_tol = 1e-6;
  long rec_max = 1L << 20;
  c_rec->add_option("file", rec_file, "presentation JSON, or - for stdin")->required();
  auto* rec_seed_opt = c_rec->add_option(
      "--scramble", rec_seed, "hide the presentation behind a seeded change of basis");
  c_rec->add_option("--noise", rec_noise,
                    "adversarial perturbation amplitude, a rational below 1/8");
  c_rec->add_option("--tol", rec_tol, "winding acceptance tolerance")
      ->check(CLI::PositiveNumber);
  c_rec->add_option("--max-samples", rec_max, "sampling cap per loop")
      ->check(CLI::PositiveNumber);
  c_rec->callback([&] {
    nilform::SkewTriple t = load_triple(rec_file);
    std::optional<std::uint64_t> seed;
    if (rec_seed_opt->count() > 0) seed = rec_seed;
    std::optional<nilform::Rat> noise;
    if (!rec_noise.empty()) noise = nilform::parse_rational(rec_noise);
    nilform::BundleOracle oracle = nilform::oracle_from_triple(t, seed, noise);
    nilform::RecoveredData rec = nilform::recover_form(oracle, rec_tol, rec_max);
    std::cout << nilform::emit_triple(rec.form) << "\n";
    for (const nilform::WindingDiagnostic& d : rec.diagnostics)
      std::cout << "# entry k=" << d.k << " i=" << d.i << " j=" << d.j
                << " samples=" << d.samples
                << " residual=" << format_residual(d.residual) << "\n";
  });

  auto* c_clock = app.add_subcommand(
      "clockshift", "finite clock-shift model at a rational angle");
  std::string clock_theta;
  c_clock->add_option("--theta", clock_theta, "angle p/q in lowest terms")
      ->required();
  c_clock->callback([&] {
    nilform::UnitaryRep rep =
        nilform::clock_shift_rep(nilform::parse_rational(clock_theta));
    long q = rep.modulus();
    double worst_trace = 0.0;
    for (long b1 = -2 * q; b1 <= 2 * q; ++b1)
      for (long b2 = -2 * q; b2 <= 2 * q; ++b2)
        worst_trace =
            std::max(worst_trace, nilform::canonical_trace_check(rep, b1, b2));
    std::cout << "modulus=" << q << "\n";
    std::cout << "commutator_residual="
              << format_residual(nilform::commutator_identity_residual(rep))
              << "\n";
    std::cout << "trace_residual=" << format_residual(worst_trace) << "\n";
    std::cout << "unitarity_residual="
              << format_residual(rep.unitarity_residual()) << "\n";
  });

  auto* c_selftest = app.add_subcommand(
      "selftest", "run the acceptance battery; exit 0 only if every criterion passes");
  c_selftest->callback([&] {
    rc = nilform::selftest::run_and_report(std::cout) == 0 ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 64;
  } catch (const nilform::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 65;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 3;
  }
  return rc;
}
