// Copyright 2026 The mubkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// mubkit command-line tool.
//
// Exit codes: 0 all checks pass, 1 a verification failed, 2 bad input.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mubkit/mubkit.hpp"

namespace {

using namespace mubkit;

struct Options {
  double tolerance = kVerifyTol;
  std::string out;
  std::string format = "json";

  std::uint32_t p = 0, m = 0;
  std::uint64_t k = 0, a = 0, q = 0;
  std::string modulus, hbar;
  std::string file;
  double beta_start = 0.0, beta_end = kTwoPi;
  std::size_t steps = 64;
  std::string kind;
  int degree = 2;
  bool field_shift = false;
};

// Opened before any computation so an unwritable --out fails fast.
class Output {
 public:
  explicit Output(const std::string& path) : path_(path) {
    if (!path_.empty()) {
      file_.open(path_, std::ios::binary | std::ios::trunc);
      require(file_.good(), "cannot open output file '" + path_ + "'");
    }
  }
  void write(const std::string& s) {
    std::ostream& os = path_.empty() ? std::cout : file_;
    os << s;
    if (!s.empty() && s.back() != '\n') os << '\n';
    os.flush();
  }

 private:
  std::string path_;
  std::ofstream file_;
};

Poly parse_poly(const std::string& text) {
  Poly out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      require(used == item.size() && v >= 0, "bad coefficient '" + item + "'");
      out.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::logic_error&) {
      throw InputError("bad coefficient '" + item + "' in polynomial '" + text + "'");
    }
  }
  require(!out.empty(), "empty polynomial");
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), "cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void check_tolerance(const Options& o) { require(o.tolerance > 0.0, "--tolerance must be positive"); }

FieldPtr field_from(const Options& o) {
  require(o.p != 0, "--p is required");
  require(o.m != 0, "--m is required");
  std::optional<Poly> modulus;
  if (!o.modulus.empty()) modulus = parse_poly(o.modulus);
  return FieldContext::make(o.p, o.m, modulus);
}

RingPtr ring_from(const Options& o) {
  require(o.m != 0, "--m is required");
  require(o.m <= kMaxRingDegree, "--m too large");
  std::optional<Poly> hbar;
  if (!o.hbar.empty()) hbar = parse_poly(o.hbar);
  return RingContext::make(o.m, hbar);
}

// The MUB set used by phase-op / phase-sweep: the ring construction for p = 2.
MubSet phase_set(const Options& o) {
  if (o.p == 2) return mub_ring(ring_from(o), o.k);
  return mub_field(field_from(o), o.k);
}

int emit_report(const VerificationReport& r, const Options& o, Output& out) {
  out.write(emit(r, parse_format(o.format)));
  return r.exit_code();
}

int cmd_gen(const Options& o) {
  check_tolerance(o);
  require(o.p != 2, "p = 2 has no quadratic field construction; use `mubkit gen-ring --m M` for qubit systems");
  Output out(o.out);
  const auto set = mub_field(field_from(o), o.k);
  out.write(to_json(set).dump());
  return 0;
}

int cmd_gen_ring(const Options& o) {
  check_tolerance(o);
  Output out(o.out);
  out.write(to_json(mub_ring(ring_from(o), o.k)).dump());
  return 0;
}

int cmd_verify(const Options& o) {
  check_tolerance(o);
  parse_format(o.format);
  const auto set = mub_from_json(parse_json_text(read_file(o.file)));
  Output out(o.out);
  return emit_report(verify_mub(set, o.tolerance).report, o, out);
}

Json matrix_json(const OperatorMatrix& a) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < a.dim(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < a.dim(); ++c) row.push_back(Json::array({a(r, c).real(), a(r, c).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

int cmd_phase_op(const Options& o) {
  check_tolerance(o);
  parse_format(o.format);
  Output out(o.out);
  const auto set = phase_set(o);
  require(o.a < set.dim, "--a must lie in [0, q)");
  const auto op = build_phase_operator(set, o.a);
  const auto u = commutator_elements(set, o.a);
  VerificationReport r;
  r.add("phase_operator/diagonal", "Theta(n,n) = pi (q-1)/q", op.max_diagonal_deviation, 0.0, o.tolerance);
  r.add("phase_operator/eigen-residual", "max ||Theta v_b - theta_b v_b||", op.max_eigen_residual, 0.0, o.tolerance);
  r.add("phase_operator/expansion-agreement", "spectral vs expanded operator", op.expansion_agreement, 0.0,
        o.tolerance);
  r.add("phase_operator/hermiticity", "Theta = Theta^dagger", op.matrix.hermiticity_deviation(), 0.0, o.tolerance);
  r.add("phase_operator/commutator-agreement", "[Theta, N] from the expansion vs direct",
        max_abs_difference(u, direct_commutator(op.matrix)), 0.0, o.tolerance);
  Json j;
  j["dim"] = set.dim;
  j["kind"] = to_string(set.kind);
  j["a"] = o.a;
  j["k"] = o.k;
  j["eigenvalues"] = op.eigenvalues;
  j["matrix"] = matrix_json(op.matrix);
  j["commutator"] = matrix_json(u);
  j["report"] = Json::parse(emit_json(r));
  out.write(j.dump());
  return r.exit_code();
}

int cmd_phase_sweep(const Options& o) {
  check_tolerance(o);
  Output out(o.out);
  const auto set = phase_set(o);
  require(o.a < set.dim, "--a must lie in [0, q)");
  out.write(sweep_csv(beta_sweep(set, o.a, beta_grid(o.beta_start, o.beta_end, o.steps))));
  return 0;
}

// q = p^m with p prime, or nullopt.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t m = 0;
  while (q % p == 0) q /= p, ++m;
  if (q != 1) return std::nullopt;
  return std::make_pair(static_cast<std::uint32_t>(p), m);
}

int cmd_bell(const Options& o) {
  check_tolerance(o);
  const BellKind kind = parse_bell_kind(o.kind);
  const ShiftMode shift = o.field_shift ? ShiftMode::field : ShiftMode::integer;
  Output out(o.out);
  BellFamily fam;
  switch (kind) {
    case BellKind::fourier:
      require(o.q >= 2 && o.q <= 64, "--q must lie in [2, 64] for the Fourier family");
      fam = bell_family_fourier(o.q);
      break;
    case BellKind::field: {
      const auto pm = prime_power(o.q);
      require(pm.has_value(), "--q must be a prime power for the field family");
      require(pm->first != 2, "the field family needs odd q; use --kind ring for q = 2^m");
      require(o.q <= 27, "--q too large for the field family (q^3 states of size q^2)");
      fam = bell_family_galois(FieldContext::make(pm->first, pm->second), shift);
      break;
    }
    case BellKind::ring: {
      std::uint32_t m = o.m;
      if (m == 0) {
        const auto pm = prime_power(o.q);
        require(pm.has_value() && pm->first == 2, "--q must be a power of 2 (or give --m) for the ring family");
        m = pm->second;
      }
      require(o.q == 0 || o.q == (std::uint64_t{1} << m), "--q and --m disagree");
      require(m <= 4, "--m too large for the ring family (at most 4)");
      fam = bell_family_ring(RingContext::make(m), shift);
      break;
    }
  }
  out.write(to_json(fam).dump());
  return 0;
}

int cmd_verify_bell(const Options& o) {
  check_tolerance(o);
  parse_format(o.format);
  const auto fam = bell_from_json(parse_json_text(read_file(o.file)));
  Output out(o.out);
  return emit_report(verify_entangled_family(fam, o.tolerance).report, o, out);
}

std::string csv_complex(Complex z) { return format_double(z.real()) + "," + format_double(z.imag()); }

int cmd_sums(const Options& o) {
  check_tolerance(o);
  Output out(o.out);
  std::string csv;
  bool ok = true;
  if (o.kind == "gamma") {
    const auto ctx = ring_from(o);
    csv = "m,y,re,im,magnitude,bound,pass\n";
    for (std::uint64_t y = 0; y < ctx->cardinality(); ++y) {
      const RingElement e = ctx->unlabel(y);
      Complex s{0.0, 0.0};
      for (const auto& u : ctx->teichmuller_set()) s += ring_additive_character(e * u);
      const double expected = ring_exponential_sum_expected(e);
      const bool pass = std::abs(std::abs(s) - expected) <= o.tolerance;
      ok = ok && pass;
      csv += std::to_string(ctx->m()) + "," + std::to_string(y) + "," + csv_complex(s) + "," +
             format_double(std::abs(s)) + "," + format_double(expected) + "," + (pass ? "true" : "false") + "\n";
    }
  } else if (o.kind == "gauss") {
    const auto ctx = field_from(o);
    require(ctx->q() <= 4096, "q too large for a Gauss-sum table");
    const auto g = primitive_element(ctx);
    csv = "q,k,c,re,im,magnitude,bound,pass\n";
    for (std::uint64_t k = 0; k + 1 < ctx->q(); ++k) {
      const MultiplicativeCharacter chi(k, g);
      for (std::uint64_t c = 0; c < ctx->q(); ++c) {
        const Complex s = gauss_sum(chi, ctx->unlabel(c));
        const double expected = gauss_sum_expected_magnitude(k == 0, c == 0, ctx->q());
        const bool pass = std::abs(std::abs(s) - expected) <= o.tolerance;
        ok = ok && pass;
        csv += std::to_string(ctx->q()) + "," + std::to_string(k) + "," + std::to_string(c) + "," + csv_complex(s) +
               "," + format_double(std::abs(s)) + "," + format_double(expected) + "," + (pass ? "true" : "false") +
               "\n";
      }
    }
  } else if (o.kind == "weil") {
    const auto ctx = field_from(o);
    require(o.degree >= 1 && o.degree <= 6, "--degree must lie in [1, 6]");
    const std::uint64_t q = ctx->q();
    std::uint64_t total = 1;
    for (int i = 0; i <= o.degree; ++i) {
      total *= q;
      require(total <= 1'000'000, "too many polynomials; lower --degree or q");
    }
    csv = "q,d,coeffs,re,im,magnitude,bound,pass\n";
    for (std::uint64_t code = 0; code < total; ++code) {
      FieldPoly f;
      std::string coeffs;
      std::uint64_t rest = code;
      for (int i = 0; i <= o.degree; ++i) {
        f.push_back(ctx->unlabel(rest % q));
        coeffs += (i ? " " : "") + std::to_string(rest % q);
        rest /= q;
      }
      if (f.back().is_zero()) continue;
      const auto res = weil_sum(f, ctx, o.tolerance);
      ok = ok && res.pass;
      csv += std::to_string(q) + "," + std::to_string(o.degree) + "," + coeffs + "," + csv_complex(res.value) + "," +
             format_double(res.magnitude) + "," + (res.bound ? format_double(*res.bound) : std::string("")) + "," +
             (res.pass ? "true" : "false") + "\n";
    }
  } else {
    throw InputError("unknown sum kind '" + o.kind + "' (expected gamma, gauss or weil)");
  }
  out.write(csv);
  return ok ? 0 : 1;
}

int cmd_paper_suite(const Options& o) {
  check_tolerance(o);
  parse_format(o.format);
  Output out(o.out);
  const auto criteria = acceptance::run_all(acceptance::Tolerances{o.tolerance});
  const auto report = acceptance::merged_report(criteria);
  return emit_report(report, o, out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mubkit: mutually unbiased bases, Galois phase operators and Bell-type bases"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--tolerance", o.tolerance, "Verification tolerance")->capture_default_str();
  app.add_option("--out", o.out, "Output file (default: standard output)");
  app.add_option("--format", o.format, "Report format: json, csv or text")->capture_default_str();

  auto field_opts = [&](CLI::App* s, bool need_m = true) {
    s->add_option("--p", o.p, "Characteristic")->required();
    auto* m = s->add_option("--m", o.m, "Extension degree");
    if (need_m) m->required();
    s->add_option("--modulus", o.modulus, "Irreducible modulus, coefficients low to high (e.g. 2,2,1)");
    s->add_option("--hbar", o.hbar, "Primitive polynomial over Z2 for the ring (p = 2)");
  };

  int rc = 0;
  auto* gen = app.add_subcommand("gen", "Generate a field MUB set (odd p)");
  field_opts(gen);
  gen->add_option("--k", o.k, "Label character index");
  gen->callback([&] { rc = cmd_gen(o); });

  auto* gen_ring = app.add_subcommand("gen-ring", "Generate a Galois-ring MUB set in dimension 2^m");
  gen_ring->add_option("--m", o.m, "Ring degree")->required();
  gen_ring->add_option("--hbar", o.hbar, "Primitive polynomial over Z2, coefficients low to high");
  gen_ring->add_option("--k", o.k, "Label character index");
  gen_ring->callback([&] { rc = cmd_gen_ring(o); });

  auto* verify = app.add_subcommand("verify", "Verify a MUB set file");
  verify->add_option("file", o.file, "MUB JSON file")->required();
  verify->callback([&] { rc = cmd_verify(o); });

  auto* phase_op = app.add_subcommand("phase-op", "Build the phase operator of basis a");
  field_opts(phase_op);
  phase_op->add_option("--a", o.a, "Basis index")->required();
  phase_op->add_option("--k", o.k, "Label character index");
  phase_op->callback([&] { rc = cmd_phase_op(o); });

  auto* sweep = app.add_subcommand("phase-sweep", "Phase statistics of the probe state over a beta grid");
  field_opts(sweep);
  sweep->add_option("--a", o.a, "Basis index")->required();
  sweep->add_option("--k", o.k, "Label character index");
  sweep->add_option("--beta-start", o.beta_start, "First beta")->capture_default_str();
  sweep->add_option("--beta-end", o.beta_end, "End of the beta range (exclusive)")->capture_default_str();
  sweep->add_option("--steps", o.steps, "Number of grid points")->capture_default_str();
  sweep->callback([&] { rc = cmd_phase_sweep(o); });

  auto* bell = app.add_subcommand("bell", "Generate a Bell-type family");
  bell->add_option("--kind", o.kind, "fourier, field or ring")->required();
  bell->add_option("--q", o.q, "Local dimension");
  bell->add_option("--m", o.m, "Ring degree (ring kind)");
  bell->add_flag("--field-shift", o.field_shift, "Shift |n, n+h> by field addition instead of integers mod q");
  bell->callback([&] { rc = cmd_bell(o); });

  auto* verify_bell = app.add_subcommand("verify-bell", "Verify a Bell family file");
  verify_bell->add_option("file", o.file, "Bell JSON file")->required();
  verify_bell->callback([&] { rc = cmd_verify_bell(o); });

  auto* sums = app.add_subcommand("sums", "Tabulate character sums as CSV");
  sums->add_option("--kind", o.kind, "gamma, gauss or weil")->required();
  sums->add_option("--p", o.p, "Characteristic (gauss, weil)");
  sums->add_option("--m", o.m, "Extension or ring degree");
  sums->add_option("--modulus", o.modulus, "Irreducible modulus");
  sums->add_option("--hbar", o.hbar, "Primitive polynomial over Z2 (gamma)");
  sums->add_option("--degree", o.degree, "Polynomial degree (weil)")->capture_default_str();
  sums->callback([&] { rc = cmd_sums(o); });

  auto* suite = app.add_subcommand("paper-suite", "Run the full reproduction matrix");
  suite->callback([&] { rc = cmd_paper_suite(o); });

  for (auto* s : app.get_subcommands({})) s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "mubkit: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "mubkit: " << e.what() << "\n";
    return 2;
  } catch (const AlgebraError& e) {
    std::cerr << "mubkit: internal consistency check failed: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
