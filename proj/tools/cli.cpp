#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "render.hpp"
#include "simplex_cover/simplex_cover.hpp"

namespace simplex_cover::cli {

namespace {

// Above this size `count` reports the top/base split without enumerating.
constexpr std::uint64_t kEnumerateLimit = 5'000'000;

struct Options {
  int d = 2;
  int n = 1;
  std::string out_path = "-";
  std::string point;
  std::string eps;
  std::string mode = "all";
  int q = 2;
  std::size_t samples = 10'000;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  bool equilateral = false;
  bool labels = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Writes through `write` to stdout for "-", otherwise to a file.
template <class Fn>
int write_output(const std::string& path, std::ostream& out, std::ostream& err, Fn write) {
  if (path == "-") {
    write(out);
    return kSuccess;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    err << "error: cannot open '" << path << "' for writing\n";
    return kFailure;
  }
  write(file);
  file.flush();
  if (!file) {
    err << "error: failed writing '" << path << "'\n";
    return kFailure;
  }
  return kSuccess;
}

std::uint64_t power(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

int cmd_count(const Options& o, std::ostream& out) {
  const auto total = cover_count(o.d, o.n);
  out << total << '\n';
  if (total <= kEnumerateLimit) {
    const auto counts = build_cover(o.d, o.n).kind_counts();
    out << "top=" << counts.top << " base_a=" << counts.base_a << " base_b=" << counts.base_b
        << '\n';
  } else {
    const auto top = power(static_cast<std::uint64_t>(o.n - 1), o.d);
    out << "top=" << top << " base=" << total - top << '\n';
  }
  return kSuccess;
}

int cmd_cover(const Options& o, std::ostream& out, std::ostream& err) {
  const auto cover = build_cover(o.d, o.n);
  return write_output(o.out_path, out, err, [&](std::ostream& s) { write_cover(s, cover); });
}

int cmd_witness(const Options& o, std::ostream& out, std::ostream& err) {
  Point x = [&] {
    try {
      return parse_point(o.point, static_cast<std::size_t>(o.d));
    } catch (const ParseError& e) {
      throw UsageError(e.what());
    }
  }();
  const auto cover = build_cover(o.d, o.n);
  try {
    const auto result = witness(x, cover);
    out << to_json(result) << '\n';
    if (result.route == Route::fallback) {
      err << "warning: constructive routes failed for " << x.str()
          << "; located by exhaustive scan\n";
    }
    return kSuccess;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  } catch (const CoverageViolation& e) {
    err << "error: coverage violation: " << e.what() << '\n';
    return kFailure;
  }
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const Rational dl = delta(o.n);
  Rational eps = dl;
  if (!o.eps.empty()) {
    try {
      eps = Rational::parse(o.eps);
    } catch (const ParseError& e) {
      throw UsageError(e.what());
    }
  }
  if (eps.sign() < 0 || eps > dl) {
    throw UsageError("--eps must satisfy 0 <= eps <= delta = " + dl.str() + ", got " + eps.str());
  }

  const bool all = o.mode == "all";
  std::vector<Point> samples;
  auto append = [&](std::vector<Point> more) {
    samples.insert(samples.end(), std::make_move_iterator(more.begin()),
                   std::make_move_iterator(more.end()));
  };
  // Exhaustive lattices only stay tractable for small d.
  if (o.mode == "lattice" || (all && o.d <= 3)) append(lattice_samples(o.d, o.n, eps, o.q));
  if (o.mode == "random" || all) append(random_samples(o.d, o.n, eps, o.samples, o.seed));
  if (o.mode == "boundary" || all) append(boundary_suite(o.d, o.n, eps));

  const auto cover = build_cover(o.d, o.n);
  const auto report = coverage_report(cover, samples, eps, o.threads);
  out << to_json(report) << '\n';
  if (report.success()) return kSuccess;

  err << "error: " << report.total - report.covered << " of " << report.total
      << " samples uncovered, " << report.routes.fallback << " fallback witnesses\n";
  for (const auto& p : report.failures) err << "  uncovered: " << p.str() << '\n';
  return kFailure;
}

int cmd_render(const Options& o, std::ostream& out, std::ostream& err) {
  const auto cover = build_cover(2, o.n);
  const auto svg = render::render_svg(cover, o.equilateral, o.labels);
  return write_output(o.out_path, out, err, [&](std::ostream& s) { s << svg; });
}

void add_dimension(CLI::App* cmd, Options& o) {
  cmd->add_option("--d", o.d, "Dimension (d >= 2)")
      ->required()
      ->check(CLI::Range(2, std::numeric_limits<int>::max()));
}

void add_size(CLI::App* cmd, Options& o) {
  cmd->add_option("--n", o.n, "Integer part of the side length (n >= 1)")
      ->required()
      ->check(CLI::Range(1, std::numeric_limits<int>::max()));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cover S^{n+delta} by unit right d-simplices and verify the cover exactly",
               "simplex-cover"};
  app.require_subcommand(1);
  Options o;

  auto* count = app.add_subcommand("count", "Print the cover size and its kind breakdown");
  add_dimension(count, o);
  add_size(count, o);

  auto* cover = app.add_subcommand("cover", "Write the cover as JSON lines");
  add_dimension(cover, o);
  add_size(cover, o);
  cover->add_option("--out", o.out_path, "Output path ('-' for stdout)");

  auto* wit = app.add_subcommand("witness", "Locate a cover element containing a point");
  add_dimension(wit, o);
  add_size(wit, o);
  wit->add_option("--point", o.point, "Comma-separated rationals, e.g. 9/8,9/8")->required();

  auto* verify = app.add_subcommand("verify", "Run a coverage campaign and print the report");
  add_dimension(verify, o);
  add_size(verify, o);
  verify->add_option("--eps", o.eps, "Side length excess, 0 <= eps <= 1/(n+2) (default delta)");
  verify->add_option("--mode", o.mode, "Sample set")
      ->check(CLI::IsMember({"lattice", "random", "boundary", "all"}));
  verify->add_option("--q", o.q, "Lattice refinement: step delta/q")->check(CLI::PositiveNumber);
  verify->add_option("--samples", o.samples, "Random sample count")->check(CLI::PositiveNumber);
  verify->add_option("--seed", o.seed, "Random seed");
  verify->add_option("--threads", o.threads, "Worker threads (0 = hardware concurrency)");

  auto* render_cmd = app.add_subcommand("render", "Write an SVG of the d = 2 cover");
  add_size(render_cmd, o);
  render_cmd->add_option("--out", o.out_path, "Output path ('-' for stdout)");
  render_cmd->add_flag("--equilateral", o.equilateral, "Shear into equilateral triangles");
  render_cmd->add_flag("--labels", o.labels, "Label each element with its kind");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (*count) return cmd_count(o, out);
    if (*cover) return cmd_cover(o, out, err);
    if (*wit) return cmd_witness(o, out, err);
    if (*verify) return cmd_verify(o, out, err);
    if (*render_cmd) return cmd_render(o, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace simplex_cover::cli
