// filiform: build, verify and classify filiform Leibniz algebras.
//
//   filiform verify params.json          Leibniz defect, lower central series
//   filiform classify params.json        orbit label, invariants, canonical form
//   filiform classify < batch.ndjson     one parameter object per line
//   filiform isomorphic a.json b.json
//   filiform table TLeib 1 2 1 1         or a parameter file
//   filiform canon params.json
//   filiform sample U6_14 --seed 7

#include <atomic>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "filiform/errors.hpp"
#include "filiform/io.hpp"

namespace {

using namespace filiform;
using io::json;

enum class Format { Text, Json };

struct Settings {
  std::string mode = "exact";
  double tol = kDefaultTol;
  std::uint64_t seed = 0;
  std::string format = "text";
  unsigned threads = 0;

  Format fmt() const { return format == "json" ? Format::Json : Format::Text; }
  bool approx() const { return mode == "float"; }
  ClassifyOptions options() const {
    ClassifyOptions o;
    o.zero_tol = tol;
    o.residual_tol = std::max(tol, kResidualTol);
    return o;
  }
};

std::string join(const std::vector<Scalar>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + to_string(v[i]);
  return out;
}

std::string display_form(const TLeibParams& p) { return "L(" + join(values_of(p)) + ")"; }

std::string display_label(const OrbitLabel& l) {
  return "U_" + std::to_string(l.dim) + "^" + std::to_string(l.index);
}

std::string transform_text(const AdaptedTransform& t) { return "A = (" + join(t.a) + "), B = (" + join(t.b) + ")"; }

io::FamilyParams load_params(const std::string& path, const Settings& s) {
  io::FamilyParams p = io::params_from_json(io::read_file(path));
  return s.approx() ? io::to_approx(p) : p;
}

TLeibParams load_tleib(const std::string& path, const Settings& s) { return io::as_tleib(load_params(path, s)); }

Scalar delta_of(const TLeibParams& p) {
  return std::visit([](const auto& q) { return delta(q); }, p);
}

std::string classification_text(const TLeibParams& p, const ClassificationResult& r) {
  std::ostringstream out;
  out << display_form(p) << " in " << display_label(r.label) << "\n";
  out << "  Δ = 4·b00·b11 - b01² = " << to_string(delta_of(p)) << "\n";
  for (const auto& inv : r.invariants) out << "  " << inv.name << " = " << to_string(inv.value) << "\n";
  if (r.degenerate) {
    out << "  degenerate stratum: " << r.degenerate_reason << "\n";
    out << "  no canonical representative\n";
  } else {
    out << "  canonical " << display_form(*r.canonical) << "\n";
    out << "  witness " << transform_text(*r.witness) << "\n";
  }
  return out.str();
}

int cmd_verify(const std::string& path, const Settings& s) {
  json j = io::read_file(path);
  AlgebraTable table = j.contains("entries") ? io::table_from_json(j) : io::build(io::params_from_json(j));
  if (s.approx()) table = table.to_approx();
  const Scalar defect = leibniz_defect(table);
  const auto lcs = lower_central_series(table);
  const bool filiform = is_filiform(table);
  if (s.fmt() == Format::Json) {
    std::cout << json{{"dim", table.dim()},
                      {"leibniz_defect", io::to_json(defect)},
                      {"lower_central_series", lcs},
                      {"filiform", filiform}}
                     .dump()
              << "\n";
  } else {
    std::cout << "dim " << table.dim() << "\n";
    std::cout << "leibniz defect " << to_string(defect) << "\n";
    std::cout << "lower central series [";
    for (std::size_t i = 0; i < lcs.size(); ++i) std::cout << (i ? ", " : "") << lcs[i];
    std::cout << "]\n";
    std::cout << "filiform " << (filiform ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_classify(const std::string& path, const Settings& s) {
  TLeibParams p = load_tleib(path, s);
  ClassificationResult r = classify(p, s.options());
  if (s.fmt() == Format::Json) {
    std::cout << io::to_json(r).dump() << "\n";
  } else {
    std::cout << classification_text(p, r);
  }
  return 0;
}

struct BatchOutcome {
  std::string text;
  int status = 0;
};

BatchOutcome classify_line(std::size_t line_no, const std::string& line, const Settings& s) {
  auto error = [&](const std::exception& e, int status) {
    json j = {{"line", line_no}, {"error", e.what()}};
    return BatchOutcome{s.fmt() == Format::Json ? j.dump() + "\n" : "line " + std::to_string(line_no) + ": error: " + e.what() + "\n", status};
  };
  try {
    io::FamilyParams fp = io::params_from_json(io::parse(line));
    if (s.approx()) fp = io::to_approx(fp);
    TLeibParams p = io::as_tleib(fp);
    ClassificationResult r = classify(p, s.options());
    if (s.fmt() == Format::Json) return {io::to_json(r).dump() + "\n", 0};
    return {classification_text(p, r), 0};
  } catch (const ParseError& e) {
    return error(e, 2);
  } catch (const std::exception& e) {
    return error(e, 1);
  }
}

// Classifies stdin lines on a worker pool and prints results in input order.
int cmd_classify_batch(const Settings& s) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(std::cin, line);) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
  }
  std::vector<BatchOutcome> results(lines.size());
  std::atomic<std::size_t> next{0};
  unsigned workers = s.threads ? s.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, lines.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < lines.size(); i = next++) results[i] = classify_line(i + 1, lines[i], s);
    });
  }
  for (auto& t : pool) t.join();
  int status = 0;
  for (const auto& r : results) {
    std::cout << r.text;
    status = std::max(status, r.status);
  }
  return status;
}

int cmd_isomorphic(const std::string& a_path, const std::string& b_path, const Settings& s) {
  TLeibParams a = load_tleib(a_path, s);
  TLeibParams b = load_tleib(b_path, s);
  IsomorphismResult r = isomorphic(a, b, s.options());
  if (s.fmt() == Format::Json) {
    std::cout << io::to_json(r).dump() << "\n";
    return 0;
  }
  std::cout << (r.isomorphic ? "isomorphic" : "not isomorphic") << (r.certificate.decided ? "" : " (undecided: degenerate stratum)")
            << "\n";
  if (r.certificate.canonical_a) std::cout << "  canonical a " << display_form(*r.certificate.canonical_a) << "\n";
  if (r.certificate.canonical_b) std::cout << "  canonical b " << display_form(*r.certificate.canonical_b) << "\n";
  if (r.certificate.witness) std::cout << "  witness " << transform_text(*r.certificate.witness) << "\n";
  return 0;
}

io::FamilyParams inline_params(const std::string& family, const std::vector<std::string>& values) {
  std::vector<Scalar> v;
  for (const auto& x : values) v.push_back(parse_scalar(x));
  if (family == "TLeib") return io::to_family(tleib_from_values(v));
  if (family == "FLeib" || family == "SLeib") {
    if (v.empty()) throw ParseError(family + " needs its coefficients followed by the last parameter");
    Scalar last = v.back();
    v.pop_back();
    const int n = static_cast<int>(v.size()) + 2;
    if (family == "FLeib") return FLeibParams{n, v, last};
    return SLeibParams{n, v, last};
  }
  throw ParseError("unknown family '" + family + "'");
}

int cmd_table(const std::string& source, const std::vector<std::string>& values, const Settings& s) {
  io::FamilyParams p = values.empty() && std::filesystem::exists(source) ? load_params(source, s)
                                                                           : inline_params(source, values);
  if (s.approx()) p = io::to_approx(p);
  AlgebraTable t = io::build(p);
  if (s.fmt() == Format::Json) {
    std::cout << io::to_json(t).dump() << "\n";
    return 0;
  }
  for (std::size_t i = 0; i < t.dim(); ++i) {
    for (std::size_t j = 0; j < t.dim(); ++j) {
      std::string terms;
      for (std::size_t k = 0; k < t.dim(); ++k) {
        const Scalar& c = t.at(i, j, k);
        if (c.is_exact() ? c.is_exact_zero() : c.abs() == 0.0) continue;
        terms += (terms.empty() ? "" : " + ") + std::string("(") + to_string(c) + ") e" + std::to_string(k);
      }
      if (!terms.empty()) std::cout << "[e" << i << ", e" << j << "] = " << terms << "\n";
    }
  }
  return 0;
}

int cmd_canon(const std::string& path, const Settings& s) {
  TLeibParams p = load_tleib(path, s);
  ClassificationResult r = classify(p, s.options());
  if (s.fmt() == Format::Json) {
    json out = {{"label", r.label.str()},
                {"canonical", r.canonical ? io::params_object(*r.canonical) : json(nullptr)},
                {"witness", r.witness ? io::to_json(*r.witness) : json(nullptr)},
                {"degenerate", r.degenerate}};
    std::cout << out.dump() << "\n";
    return 0;
  }
  if (r.degenerate) {
    std::cout << display_form(p) << " lies on a degenerate stratum of " << display_label(r.label) << ": "
              << r.degenerate_reason << "\n";
    return 0;
  }
  std::cout << display_form(*r.canonical) << "\n  witness " << transform_text(*r.witness) << "\n";
  return 0;
}

int cmd_sample(const std::string& label_text, const Settings& s) {
  TLeibParams p = sample_orbit_member(OrbitLabel::parse(label_text), s.seed);
  if (s.approx()) p = io::as_tleib(io::to_approx(io::to_family(p)));
  if (s.fmt() == Format::Json) {
    std::cout << io::to_json(io::to_family(p)).dump() << "\n";
  } else {
    std::cout << display_form(p) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Filiform Leibniz algebras: tables, base changes and TLeib orbit classification"};
  app.require_subcommand(1);
  Settings s;
  app.add_option("--mode", s.mode, "Scalar mode for inputs")->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--tol", s.tol, "Zero tolerance in float mode");
  app.add_option("--seed", s.seed, "Seed for sample");
  app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--threads", s.threads, "Batch workers (0 = hardware concurrency)");

  std::string file_a, file_b, source, label;
  std::vector<std::string> values;
  auto* verify = app.add_subcommand("verify", "Leibniz defect, filiform check and lower central series");
  verify->add_option("file", file_a, "Parameter or table file")->required();
  auto* classify_cmd = app.add_subcommand("classify", "Classify a TLeib tuple; reads NDJSON from stdin without a file");
  classify_cmd->add_option("file", file_a, "Parameter file");
  auto* iso = app.add_subcommand("isomorphic", "Decide isomorphism of two TLeib tuples");
  iso->add_option("a", file_a)->required();
  iso->add_option("b", file_b)->required();
  auto* table = app.add_subcommand("table", "Full multiplication table");
  table->add_option("source", source, "Parameter file or family name (TLeib, FLeib, SLeib)")->required();
  table->add_option("values", values, "Inline parameters");
  auto* canon = app.add_subcommand("canon", "Canonical tuple and witness transform");
  canon->add_option("file", file_a)->required();
  auto* sample = app.add_subcommand("sample", "Random member of an orbit subset");
  sample->add_option("label", label, "Label such as U5_2 or U6_14")->required();
  // Global flags may also follow the verb.
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*verify) return cmd_verify(file_a, s);
    if (*classify_cmd) return file_a.empty() || file_a == "-" ? cmd_classify_batch(s) : cmd_classify(file_a, s);
    if (*iso) return cmd_isomorphic(file_a, file_b, s);
    if (*table) return cmd_table(source, values, s);
    if (*canon) return cmd_canon(file_a, s);
    if (*sample) return cmd_sample(label, s);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
