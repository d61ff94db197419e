// Command-line front end. Talks to the library only through hapol.h.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>

#include "CLI11.hpp"
#include "hapol/hapol.h"

namespace {

enum Exit : int { kOk = 0, kInternal = 1, kValidation = 2, kSearch = 3 };

struct ValidationError {
  std::string message;
};

int exit_code(hapol_status status) {
  switch (status) {
    case HAPOL_OK: return kOk;
    case HAPOL_ERR_INVALID_ARGUMENT:
    case HAPOL_ERR_DEGENERATE:
    case HAPOL_ERR_OFF_CURVE:
    case HAPOL_ERR_ON_AXIS: return kValidation;
    case HAPOL_ERR_SEARCH_FAILED:
    case HAPOL_ERR_NO_STRADDLE: return kSearch;
    case HAPOL_ERR_INTERNAL: break;
  }
  return kInternal;
}

int report_failure(hapol_status status) {
  std::cerr << "hapol: " << hapol_status_string(status) << ": " << hapol_last_error() << "\n";
  return exit_code(status);
}

// Owning wrapper for hapol_text.
class Text {
 public:
  Text() = default;
  Text(const Text&) = delete;
  Text& operator=(const Text&) = delete;
  ~Text() { hapol_text_free(text_); }

  hapol_text** out() { return &text_; }
  std::string str() const { return {hapol_text_data(text_), hapol_text_size(text_)}; }
  explicit operator bool() const { return text_ != nullptr; }

 private:
  hapol_text* text_ = nullptr;
};

bool write_to(const std::string& path, const std::string& body) {
  if (path.empty() || path == "-") {
    std::cout << body;
    if (!body.empty() && body.back() != '\n') std::cout << '\n';
    return static_cast<bool>(std::cout);
  }
  std::ofstream file(path, std::ios::binary);
  file << body;
  if (!body.empty() && body.back() != '\n') file << '\n';
  return static_cast<bool>(file);
}

// Writes a JSON/CSV document, returning the process exit code.
int deliver(hapol_status status, const Text& text, const std::string& path) {
  if (text && !write_to(path, text.str())) {
    std::cerr << "hapol: cannot write " << path << "\n";
    return kInternal;
  }
  return status == HAPOL_OK ? kOk : report_failure(status);
}

void require_triple(double a, double b, double c) {
  if (!(c > 0.0)) throw ValidationError{"-c must be positive"};
  if (!(b > c)) throw ValidationError{"-b must be greater than -c"};
  if (!(a > b)) throw ValidationError{"-a must be greater than -b"};
}

// Positive decimal integer without leading zeros, for exact mode.
std::string require_integer(const std::string& text, const char* flag) {
  std::string digits = text;
  if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
  const auto first = digits.find_first_not_of('0');
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw ValidationError{std::string(flag) + " must be an integer with --exact"};
  if (first == std::string::npos) throw ValidationError{std::string(flag) + " must be positive"};
  return digits.substr(first);
}

bool integer_greater(const std::string& x, const std::string& y) {
  return x.size() != y.size() ? x.size() > y.size() : x > y;
}

std::pair<long, long> parse_range(const std::string& text, const char* flag) {
  const auto colon = text.find(':');
  try {
    std::size_t used = 0;
    if (colon == std::string::npos) {
      const long v = std::stol(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    const std::string lo_text = text.substr(0, colon), hi_text = text.substr(colon + 1);
    const long lo = std::stol(lo_text, &used);
    if (used != lo_text.size()) throw std::invalid_argument(text);
    const long hi = std::stol(hi_text, &used);
    if (used != hi_text.size()) throw std::invalid_argument(text);
    if (lo > hi) throw ValidationError{std::string(flag) + " must be LO:HI with LO <= HI"};
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw ValidationError{std::string(flag) + " must be an integer or LO:HI"};
  }
}

std::optional<hapol_family> parse_family(const std::string& name) {
  if (name == "quadratic" || name == "QuadraticMean") return HAPOL_QUADRATIC_MEAN;
  if (name == "geometric" || name == "GeometricMean") return HAPOL_GEOMETRIC_MEAN;
  if (name == "harmonic" || name == "HarmonicQuadratic") return HAPOL_HARMONIC_QUADRATIC;
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hyperbolic Apollonius loci, four-point equal-angle tests and geometric probabilities"};
  app.require_subcommand(1);
  app.set_version_flag("--version", hapol_version());

  std::string output;
  app.add_option("-o,--output", output, "Write the JSON/CSV result here instead of stdout");

  // classify
  auto* classify = app.add_subcommand("classify", "Quartic coefficients and curve regime");
  std::string ca, cb, cc;
  double eps = 1e-12;
  bool exact = false;
  classify->add_option("-a", ca, "Height of A")->required();
  classify->add_option("-b", cb, "Height of B")->required();
  classify->add_option("-c", cc, "Height of C")->required();
  classify->add_option("--eps", eps, "Relative tolerance for boundary regimes");
  classify->add_flag("--exact", exact, "Classify integer heights exactly");
  classify->add_flag("--json", "JSON output (default)");

  // sample
  auto* sample = app.add_subcommand("sample", "Sample the locus in polar coordinates");
  double sa = 0, sb = 0, sc = 0;
  int n_theta = 256;
  std::string svg_path;
  bool csv = false;
  sample->add_option("-a", sa, "Height of A")->required();
  sample->add_option("-b", sb, "Height of B")->required();
  sample->add_option("-c", sc, "Height of C")->required();
  sample->add_option("-n", n_theta, "Number of polar angles");
  sample->add_flag("--csv", csv, "CSV output theta,r,x,y (default unless --svg)");
  sample->add_option("--svg", svg_path, "Write an SVG plot to PATH");

  // euclid-locus
  auto* euclid = app.add_subcommand("euclid-locus", "Euclidean Apollonius circle or line");
  double ea = 0, eb = 0, ec = 0;
  euclid->add_option("-a", ea, "Height of A")->required();
  euclid->add_option("-b", eb, "Height of B")->required();
  euclid->add_option("-c", ec, "Height of C")->required();
  euclid->add_flag("--json", "JSON output (default)");

  // fourpoint
  auto* four = app.add_subcommand("fourpoint", "Cross-ratio test and witness search");
  std::string geometry = "hyper";
  double fa = 0, fb = 0, fc = 0, fd = 0;
  bool want_witness = false;
  four->add_option("--geometry", geometry, "euclid or hyper")
      ->check(CLI::IsMember({"euclid", "hyper"}));
  four->add_option("-a", fa, "Height of A")->required();
  four->add_option("-b", fb, "Height of B")->required();
  four->add_option("-c", fc, "Height of C")->required();
  four->add_option("-d", fd, "Height of D")->required();
  four->add_flag("--witness", want_witness, "Search for an equal-angle point");
  four->add_flag("--json", "JSON output (default)");

  // prob
  auto* prob = app.add_subcommand("prob", "Monte Carlo and quadrature probabilities");
  std::string kind;
  std::uint64_t n_samples = 1000000, seed = 1;
  double ratio = 2.0;
  bool quadrature = false, calibrate = false;
  unsigned threads = 1;
  double target = hapol_ph_closed_form_paper();
  std::vector<double> bracket{1.01, 1000.0};
  double cal_tol = 1e-10;
  prob->add_option("kind", kind, "pe (Euclidean) or ph (hyperbolic)")
      ->required()
      ->check(CLI::IsMember({"pe", "ph"}));
  prob->add_option("-n", n_samples, "Monte Carlo sample count");
  prob->add_option("--seed", seed, "Random seed");
  auto* ratio_opt = prob->add_option("--ratio", ratio, "Endpoint ratio a/d (ph only)");
  prob->add_flag("--quadrature", quadrature, "Include the quadrature value");
  prob->add_flag("--calibrate", calibrate, "Find the ratio reproducing --target (ph only)");
  prob->add_option("--target", target, "Calibration target probability");
  prob->add_option("--bracket", bracket, "Calibration bracket LO HI")->expected(2);
  prob->add_option("--tol", cal_tol, "Relative calibration tolerance on the ratio");
  prob->add_option("--threads", threads, "Worker threads (results do not depend on it)");
  prob->add_flag("--json", "JSON output (default)");

  // dioph
  auto* dioph = app.add_subcommand("dioph", "Integer triples on the boundary regimes");
  std::string family_name = "quadratic", m_range = "1:5", n_range = "1:5";
  long k_mult = 1;
  dioph->add_option("--family", family_name, "quadratic, geometric or harmonic");
  dioph->add_option("--m-range", m_range, "m (or p) range LO:HI");
  dioph->add_option("--n-range", n_range, "n (or q) range LO:HI");
  dioph->add_option("--k", k_mult, "Multiplier for the geometric family");
  dioph->add_flag("--csv", "CSV output (default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kValidation;
  }

  try {
    Text text;
    if (*classify) {
      if (exact) {
        const std::string a = require_integer(ca, "-a"), b = require_integer(cb, "-b"),
                          c = require_integer(cc, "-c");
        if (!integer_greater(b, c)) throw ValidationError{"-b must be greater than -c"};
        if (!integer_greater(a, b)) throw ValidationError{"-a must be greater than -b"};
        return deliver(hapol_classify_exact_json(a.c_str(), b.c_str(), c.c_str(), text.out()), text,
                       output);
      }
      double a = 0, b = 0, c = 0;
      try {
        a = std::stod(ca), b = std::stod(cb), c = std::stod(cc);
      } catch (const std::logic_error&) {
        throw ValidationError{"-a, -b and -c must be numbers"};
      }
      require_triple(a, b, c);
      if (!(eps >= 0.0)) throw ValidationError{"--eps must be non-negative"};
      return deliver(hapol_classify_json({a, b, c}, eps, text.out()), text, output);
    }

    if (*sample) {
      require_triple(sa, sb, sc);
      if (n_theta < 2) throw ValidationError{"-n must be at least 2"};
      hapol_curve* curve = nullptr;
      if (hapol_status st = hapol_sample_curve({sa, sb, sc}, n_theta, &curve); st != HAPOL_OK)
        return report_failure(st);
      int code = kOk;
      if (!svg_path.empty()) {
        Text svg;
        const hapol_status st = hapol_curve_svg(curve, 800, 600, svg.out());
        if (st != HAPOL_OK) {
          code = report_failure(st);
        } else if (!write_to(svg_path, svg.str())) {
          std::cerr << "hapol: cannot write " << svg_path << "\n";
          code = kInternal;
        }
      }
      if (code == kOk && (csv || svg_path.empty()))
        code = deliver(hapol_curve_csv(curve, text.out()), text, output);
      hapol_curve_free(curve);
      return code;
    }

    if (*euclid) {
      require_triple(ea, eb, ec);
      return deliver(hapol_euclidean_locus_json({ea, eb, ec}, text.out()), text, output);
    }

    if (*four) {
      const bool hyper = geometry == "hyper";
      if (hyper && !(fd > 0.0)) throw ValidationError{"-d must be positive for --geometry hyper"};
      if (!(fc > fd)) throw ValidationError{"-c must be greater than -d"};
      if (!(fb > fc)) throw ValidationError{"-b must be greater than -c"};
      if (!(fa > fb)) throw ValidationError{"-a must be greater than -b"};
      const hapol_four cfg{hyper ? HAPOL_HYPERBOLIC : HAPOL_EUCLIDEAN, fa, fb, fc, fd};
      return deliver(hapol_fourpoint_json(&cfg, want_witness, text.out()), text, output);
    }

    if (*prob) {
      if (n_samples < 1) throw ValidationError{"-n must be at least 1"};
      if (threads < 1) throw ValidationError{"--threads must be at least 1"};
      if (kind == "pe") {
        if (calibrate) throw ValidationError{"--calibrate applies to ph only"};
        if (ratio_opt->count() > 0) throw ValidationError{"--ratio applies to ph only"};
        return deliver(hapol_pe_json(n_samples, seed, threads, quadrature, text.out()), text, output);
      }
      if (calibrate) {
        if (!(bracket[0] > 1.0) || !(bracket[1] > bracket[0]))
          throw ValidationError{"--bracket must satisfy 1 < LO < HI"};
        if (!(cal_tol > 0.0)) throw ValidationError{"--tol must be positive"};
        return deliver(hapol_calibration_json(target, bracket[0], bracket[1], cal_tol, text.out()),
                       text, output);
      }
      if (!(ratio > 1.0)) throw ValidationError{"--ratio must be greater than 1"};
      return deliver(hapol_ph_json(n_samples, seed, ratio, threads, quadrature, text.out()), text,
                     output);
    }

    if (*dioph) {
      const auto family = parse_family(family_name);
      if (!family) throw ValidationError{"--family must be quadratic, geometric or harmonic"};
      const auto [m_lo, m_hi] = parse_range(m_range, "--m-range");
      const auto [n_lo, n_hi] = parse_range(n_range, "--n-range");
      if (*family == HAPOL_GEOMETRIC_MEAN && k_mult < 1) throw ValidationError{"--k must be positive"};
      hapol_family_table* table = nullptr;
      if (hapol_status st = hapol_family_generate(*family, m_lo, m_hi, n_lo, n_hi, k_mult, &table);
          st != HAPOL_OK)
        return report_failure(st);
      const int code = deliver(hapol_family_csv(table, text.out()), text, output);
      hapol_family_table_free(table);
      return code;
    }
  } catch (const ValidationError& e) {
    std::cerr << "hapol: " << e.message << "\n";
    return kValidation;
  } catch (const std::exception& e) {
    std::cerr << "hapol: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
