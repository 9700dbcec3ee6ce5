#pragma once

// Command implementations for the sixvertex tool. Each command writes to the
// given streams and returns the process exit code, so tests can drive them
// without spawning a process.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sixvertex/sixvertex.hpp"

namespace sixvertex::cli {

enum Exit : int { ok = 0, config_error = 1, disagreement = 2, degenerate = 3 };

// ---------------------------------------------------------------------------
// JSON with source lines
//
// nlohmann/json does not keep positions, so the document is parsed through a
// SAX handler fed by a counting iterator; each JSON pointer maps to the line
// on which its value (or key) ends.

class LocatedJson {
 public:
  Json doc;

  std::size_t line_of(std::string pointer) const {
    // Fall back to the nearest enclosing value that was seen.
    for (;;) {
      if (auto it = lines_.find(pointer); it != lines_.end()) return it->second;
      const auto cut = pointer.rfind('/');
      if (cut == std::string::npos || pointer.empty()) return 1;
      pointer.resize(cut);
    }
  }

  static LocatedJson parse(const std::string& text);

 private:
  std::map<std::string, std::size_t> lines_;
  friend class LocatingSax;
};

namespace detail {

// Input iterator over a string that remembers how far the parser has read.
struct CountingIterator {
  using iterator_category = std::input_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  const char* at = nullptr;
  std::size_t* consumed = nullptr;
  const char* begin = nullptr;

  reference operator*() const { return *at; }
  CountingIterator& operator++() {
    ++at;
    *consumed = static_cast<std::size_t>(at - begin);
    return *this;
  }
  CountingIterator operator++(int) {
    auto old = *this;
    ++*this;
    return old;
  }
  bool operator==(const CountingIterator& o) const { return at == o.at; }
  bool operator!=(const CountingIterator& o) const { return at != o.at; }
};

inline std::string escape_pointer_token(const std::string& key) {
  std::string out;
  for (char ch : key) {
    if (ch == '~') out += "~0";
    else if (ch == '/') out += "~1";
    else out += ch;
  }
  return out;
}

}  // namespace detail

class LocatingSax : public nlohmann::detail::json_sax_dom_parser<Json> {
  using Base = nlohmann::detail::json_sax_dom_parser<Json>;

 public:
  LocatingSax(LocatedJson& target, const std::string& text, const std::size_t& consumed)
      : Base(target.doc, true), target_(target), text_(text), consumed_(consumed) {}

  bool null() { return scalar_value() && Base::null(); }
  bool boolean(bool v) { return scalar_value() && Base::boolean(v); }
  bool number_integer(number_integer_t v) { return scalar_value() && Base::number_integer(v); }
  bool number_unsigned(number_unsigned_t v) { return scalar_value() && Base::number_unsigned(v); }
  bool number_float(number_float_t v, const string_t& s) { return scalar_value() && Base::number_float(v, s); }
  bool string(string_t& v) { return scalar_value() && Base::string(v); }
  bool binary(binary_t& v) { return scalar_value() && Base::binary(v); }

  bool start_object(std::size_t len) {
    open(false);
    return Base::start_object(len);
  }
  bool key(string_t& k) {
    frames_.back().key = k;
    record(current_pointer());
    return Base::key(k);
  }
  bool end_object() {
    close();
    return Base::end_object();
  }
  bool start_array(std::size_t len) {
    open(true);
    return Base::start_array(len);
  }
  bool end_array() {
    close();
    return Base::end_array();
  }

 private:
  struct Frame {
    bool array = false;
    std::size_t index = 0;
    std::string key;
  };

  std::size_t current_line() const {
    const std::size_t upto = std::min(consumed_, text_.size());
    return 1 + static_cast<std::size_t>(std::count(text_.begin(), text_.begin() + static_cast<long>(upto), '\n'));
  }

  std::string current_pointer() const {
    std::string p;
    for (const auto& f : frames_) p += "/" + (f.array ? std::to_string(f.index) : detail::escape_pointer_token(f.key));
    return p;
  }

  void record(const std::string& pointer) { target_.lines_.emplace(pointer, current_line()); }

  bool scalar_value() {
    record(current_pointer());
    advance();
    return true;
  }
  void open(bool array) {
    record(current_pointer());
    frames_.push_back(Frame{array, 0, {}});
  }
  void close() {
    frames_.pop_back();
    advance();
  }
  void advance() {
    if (!frames_.empty() && frames_.back().array) ++frames_.back().index;
  }

  LocatedJson& target_;
  const std::string& text_;
  const std::size_t& consumed_;
  std::vector<Frame> frames_;
};

// Throws ParseError carrying "line L, column C" for malformed JSON.
inline LocatedJson LocatedJson::parse(const std::string& text) {
  LocatedJson out;
  std::size_t consumed = 0;
  LocatingSax sax(out, text, consumed);
  detail::CountingIterator first{text.data(), &consumed, text.data()};
  detail::CountingIterator last{text.data() + text.size(), &consumed, text.data()};
  try {
    Json::sax_parse(first, last, &sax, nlohmann::detail::input_format_t::json, true);
  } catch (const Json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    const auto nl = static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(upto), '\n'));
    const auto line_start = text.rfind('\n', upto == 0 ? 0 : upto - 1);
    const std::size_t col = line_start == std::string::npos || upto == 0 ? upto + 1 : upto - line_start;
    std::string msg = e.what();
    if (auto p = msg.find(": "); p != std::string::npos) msg = msg.substr(p + 2);
    throw ParseError("line " + std::to_string(nl + 1) + ", column " + std::to_string(col) + ": " + msg);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Job configuration

enum class Method { contraction_trace, contraction_expectation, det_v, det_u, sum_v, sum_u, cramer, all };
enum class Mode { exact, float_ };

inline constexpr std::array<Method, 7> kConcreteMethods{Method::contraction_trace, Method::contraction_expectation,
                                                        Method::det_v,             Method::det_u,
                                                        Method::sum_v,             Method::sum_u,
                                                        Method::cramer};

inline const char* method_label(Method m) {
  switch (m) {
    case Method::contraction_trace: return "contraction-trace";
    case Method::contraction_expectation: return "contraction-expectation";
    case Method::det_v: return "det-v";
    case Method::det_u: return "det-u";
    case Method::sum_v: return "sum-v";
    case Method::sum_u: return "sum-u";
    case Method::cramer: return "cramer";
    case Method::all: return "all";
  }
  return "?";
}

inline std::optional<Method> parse_method(const std::string& s) {
  for (Method m : kConcreteMethods) {
    if (s == method_label(m)) return m;
  }
  if (s == "all") return Method::all;
  return std::nullopt;
}

inline const char* mode_label(Mode m) { return m == Mode::exact ? "exact" : "float"; }

inline std::optional<Mode> parse_mode(const std::string& s) {
  if (s == "exact") return Mode::exact;
  if (s == "float") return Mode::float_;
  return std::nullopt;
}

struct JobConfig {
  Instance instance;
  Method method = Method::all;
  Mode mode = Mode::exact;
  std::optional<std::string> output;
};

namespace detail {

inline void require_keys(const Json& obj, const std::string& where, const std::vector<std::string>& allowed,
                         const std::vector<std::string>& required) {
  if (!obj.is_object()) throw SchemaError(where.empty() ? "/" : where, "expected an object");
  for (const auto& [key, _] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw SchemaError(where + "/" + escape_pointer_token(key), "unknown key \"" + key + "\"");
    }
  }
  for (const auto& key : required) {
    if (!obj.contains(key)) throw SchemaError(where.empty() ? "/" : where, "missing required key \"" + key + "\"");
  }
}

inline std::string string_field(const Json& j, const std::string& where) {
  if (!j.is_string()) throw SchemaError(where, "expected a string");
  return j.get<std::string>();
}

}  // namespace detail

// Schema check and decoding. Throws SchemaError with the offending pointer.
// Degenerate values (zero c, zero boundary vector, u_i = v_j) surface as
// DegenerateError instead.
inline JobConfig job_from_json(const Json& j) {
  detail::require_keys(j, "", {"c", "u", "v", "boundary", "method", "mode", "output"}, {"c", "u", "v", "boundary"});
  const Scalar c = scalar_from_json(j.at("c"), "/c");
  const auto u = scalars_from_json(j.at("u"), "/u");
  const auto v = scalars_from_json(j.at("v"), "/v");

  const Json& b = j.at("boundary");
  detail::require_keys(b, "/boundary", {"w", "e", "n", "s", "a", "d_tilde"}, {"w", "e", "n", "s"});
  auto vec = [&](const char* key, Vec2<Scalar> fallback) {
    return b.contains(key) ? vec2_from_json(b.at(key), std::string("/boundary/") + key) : fallback;
  };
  const Vec2<Scalar> one{Scalar(1), Scalar(1)};

  JobConfig job;
  if (j.contains("method")) {
    const auto m = parse_method(detail::string_field(j.at("method"), "/method"));
    if (!m) throw SchemaError("/method", "unknown method \"" + j.at("method").get<std::string>() + "\"");
    job.method = *m;
  }
  if (j.contains("mode")) {
    const auto m = parse_mode(detail::string_field(j.at("mode"), "/mode"));
    if (!m) throw SchemaError("/mode", "mode must be \"exact\" or \"float\"");
    job.mode = *m;
  }
  if (j.contains("output")) job.output = detail::string_field(j.at("output"), "/output");

  job.instance.cfg = build_boundary(vec("w", one), vec("e", one), vec("n", one), vec("s", one), vec("a", one),
                                    vec("d_tilde", one));
  job.instance.params = ParamSet<Scalar>::make(u, v, c);
  return job;
}

// ---------------------------------------------------------------------------
// Evaluation

template <FieldScalar T>
T evaluate(Method method, const ParamSet<T>& p, const BoundaryConfig<T>& cfg, const DerivedConstants<T>& k) {
  switch (method) {
    case Method::contraction_trace: return partition_trace(LatticeSpec<T>::from_boundary(p, cfg));
    case Method::contraction_expectation: return partition_expectation(p, cfg);
    case Method::det_v: return closed_form_Z(p, cfg, k, IzerginMethod::det_v);
    case Method::det_u: return closed_form_Z(p, cfg, k, IzerginMethod::det_u);
    case Method::sum_v: return closed_form_Z(p, cfg, k, IzerginMethod::sum_v);
    case Method::sum_u: return closed_form_Z(p, cfg, k, IzerginMethod::sum_u);
    case Method::cramer: return cramer_Z(p, cfg, k);
    case Method::all: break;
  }
  throw Error("evaluate: 'all' is not a single method");
}

// Reasons a method cannot run on an m x n instance, checked before any work.
inline std::optional<std::string> inapplicable(Method method, std::size_t m, std::size_t n, Mode mode,
                                               const Ceilings& ceil = {}) {
  const std::size_t side = std::min(m, n);
  const bool exact = mode == Mode::exact;
  switch (method) {
    case Method::contraction_trace: {
      const std::size_t lim = exact ? ceil.exact_trace : ceil.float_trace;
      if (side > lim) return "operator size 2^" + std::to_string(side) + " exceeds the " + mode_label(mode) +
                             " contraction-trace ceiling 2^" + std::to_string(lim);
      break;
    }
    case Method::contraction_expectation: {
      const std::size_t lim = exact ? ceil.exact_expectation : ceil.float_expectation;
      if (side > lim) return "operator size 2^" + std::to_string(side) + " exceeds the " + mode_label(mode) +
                             " contraction-expectation ceiling 2^" + std::to_string(lim);
      break;
    }
    case Method::sum_v:
      if (n > kMaxSumSize) return "partition sum over 2^" + std::to_string(n) + " subsets is refused";
      break;
    case Method::sum_u:
      if (m > kMaxSumSize) return "partition sum over 2^" + std::to_string(m) + " subsets is refused";
      break;
    case Method::cramer:
      if (m != n) return "cramer needs m = n";
      break;
    default:
      break;
  }
  return std::nullopt;
}

struct MethodOutcome {
  Method method;
  std::optional<Scalar> exact;
  std::optional<Complex> approx;
  std::optional<std::string> skipped;  // reason
  std::optional<std::string> degenerate_quantity;
  double wall_ms = 0;
};

inline Json value_json(const MethodOutcome& o) {
  if (o.exact) return to_json_pair(*o.exact);
  return to_json(*o.approx);
}

inline bool float_close(const Complex& a, const Complex& b) {
  if (!std::isfinite(a.real()) || !std::isfinite(a.imag()) || !std::isfinite(b.real()) || !std::isfinite(b.imag())) {
    return a == b;
  }
  return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
}

template <FieldScalar T>
MethodOutcome run_method(Method method, const ParamSet<T>& p, const BoundaryConfig<T>& cfg,
                         const DerivedConstants<T>& k) {
  MethodOutcome out{method, {}, {}, {}, {}, 0};
  const auto t0 = std::chrono::steady_clock::now();
  T value = evaluate(method, p, cfg, k);
  out.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  if constexpr (is_exact_v<T>) {
    out.exact = value;
  } else {
    out.approx = value;
  }
  return out;
}

struct ComputeOptions {
  std::string config_path;
  std::optional<std::string> method;
  std::optional<std::string> mode;
  std::optional<std::string> output;
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

template <FieldScalar T>
std::vector<MethodOutcome> run_all(const std::vector<Method>& methods, const ParamSet<T>& p,
                                   const BoundaryConfig<T>& cfg, Mode mode, bool single) {
  std::vector<MethodOutcome> out;
  std::optional<DerivedConstants<T>> k;
  for (Method meth : methods) {
    if (auto why = inapplicable(meth, p.m(), p.n(), mode)) {
      if (single) throw CeilingError(std::string(method_label(meth)) + ": " + *why);
      out.push_back(MethodOutcome{meth, {}, {}, *why, {}, 0});
      continue;
    }
    try {
      if (!k) k = derive_constants(cfg);
      out.push_back(run_method(meth, p, cfg, *k));
    } catch (const DegenerateError& e) {
      if (single) throw;
      out.push_back(MethodOutcome{meth, {}, {}, e.what(), e.quantity(), 0});
    }
  }
  return out;
}

}  // namespace detail

inline int cmd_compute(const ComputeOptions& opt, std::ostream& out, std::ostream& err) {
  std::string text;
  try {
    text = detail::read_file(opt.config_path);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return config_error;
  }

  JobConfig job;
  try {
    const LocatedJson located = LocatedJson::parse(text);
    try {
      job = job_from_json(located.doc);
    } catch (const SchemaError& e) {
      err << opt.config_path << ":" << located.line_of(e.pointer()) << ": " << e.pointer() << ": " << e.detail()
          << '\n';
      return config_error;
    }
  } catch (const ParseError& e) {
    err << opt.config_path << ": " << e.what() << '\n';
    return config_error;
  } catch (const DegenerateError& e) {
    err << "degenerate input (" << e.quantity() << "): " << e.what() << '\n';
    return degenerate;
  }

  if (opt.method) {
    const auto m = parse_method(*opt.method);
    if (!m) {
      err << "error: unknown method \"" << *opt.method << "\"\n";
      return config_error;
    }
    job.method = *m;
  }
  if (opt.mode) {
    const auto m = parse_mode(*opt.mode);
    if (!m) {
      err << "error: mode must be exact or float\n";
      return config_error;
    }
    job.mode = *m;
  }
  if (opt.output) job.output = opt.output;

  const bool single = job.method != Method::all;
  std::vector<Method> methods;
  if (single) methods.push_back(job.method);
  else methods.assign(kConcreteMethods.begin(), kConcreteMethods.end());

  const auto& p = job.instance.params;
  std::vector<MethodOutcome> results;
  try {
    if (job.mode == Mode::exact) {
      results = detail::run_all(methods, p, job.instance.cfg, job.mode, single);
    } else {
      results = detail::run_all(methods, convert<Complex>(p), convert<Complex>(job.instance.cfg), job.mode, single);
    }
  } catch (const DegenerateError& e) {
    err << "degenerate input (" << e.quantity() << "): " << e.what() << '\n';
    return degenerate;
  } catch (const SingularityError& e) {
    err << "degenerate input: " << e.what() << '\n';
    return degenerate;
  } catch (const CeilingError& e) {
    err << "error: " << e.what() << '\n';
    return config_error;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << '\n';
    return config_error;
  }

  Json values = Json::object(), skipped = Json::object(), timings = Json::object();
  const MethodOutcome* ref = nullptr;
  bool agree = true;
  std::optional<std::string> degenerate_quantity;
  for (const auto& r : results) {
    if (r.skipped) {
      Json s{{"reason", *r.skipped}};
      if (r.degenerate_quantity) {
        s["quantity"] = *r.degenerate_quantity;
        if (!degenerate_quantity) degenerate_quantity = r.degenerate_quantity;
      }
      skipped[method_label(r.method)] = s;
      continue;
    }
    values[method_label(r.method)] = value_json(r);
    timings[method_label(r.method)] = r.wall_ms;
    if (!ref) {
      ref = &r;
    } else if (r.exact) {
      agree = agree && *r.exact == *ref->exact;
    } else {
      agree = agree && float_close(*r.approx, *ref->approx);
    }
  }
  if (values.empty()) {
    err << "degenerate input";
    if (degenerate_quantity) err << " (" << *degenerate_quantity << ")";
    err << ": no method applies\n";
    return degenerate;
  }

  Json result{{"m", p.m()}, {"n", p.n()}, {"mode", mode_label(job.mode)}, {"values", values}, {"agreement", agree}};
  if (!skipped.empty()) result["skipped"] = skipped;
  result["timings_ms"] = timings;

  if (job.output) {
    std::ofstream f(*job.output);
    if (!f) {
      err << "error: cannot write " << *job.output << '\n';
      return config_error;
    }
    f << result.dump(2) << '\n';
  } else {
    out << result.dump(2) << '\n';
  }
  if (!agree) {
    err << "methods disagree: " << values.dump() << '\n';
    return disagreement;
  }
  return ok;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
  std::string suite;
  std::uint64_t seed = 1;
  std::size_t max_size = 0;
};

inline int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  std::vector<Suite> suites;
  if (opt.suite == "all") {
    suites.assign(kAllSuites.begin(), kAllSuites.end());
  } else if (auto s = parse_suite(opt.suite)) {
    suites.push_back(*s);
  } else {
    err << "error: unknown suite \"" << opt.suite << "\"\n";
    return config_error;
  }
  bool pass = true;
  for (Suite s : suites) {
    const auto reports = run_suite(s, SuiteOptions{opt.seed, opt.max_size, 0});
    for (const auto& r : reports) {
      Json line = r.to_json();
      line["suite"] = suite_name(s);
      out << line.dump() << '\n';
    }
    pass = pass && all_passed(reports);
  }
  return pass ? ok : config_error;
}

// ---------------------------------------------------------------------------
// bench

struct BenchOptions {
  std::string sizes;
  std::string methods = "det-v,contraction-expectation";
  std::string mode = "exact";
};

// 64-bit FNV-1a of the value printed as "%.6e,%.6e", so exact and float runs
// of the same instance share a digest.
inline std::string value_digest(const Complex& z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.6e,%.6e", z.real(), z.imag());
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (const char* c = buf; *c != '\0'; ++c) {
    hash ^= static_cast<unsigned char>(*c);
    hash *= 0x100000001b3ULL;
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(hash));
  return hex;
}

// u_i = 4i, v_j = 4j + 2, c = 1 with the 1x1 worked-example compass vectors.
inline Instance bench_instance(std::size_t n) {
  std::vector<Scalar> u, v;
  for (std::size_t i = 1; i <= n; ++i) {
    u.emplace_back(static_cast<long>(4 * i));
    v.emplace_back(static_cast<long>(4 * i + 2));
  }
  auto vec = [](long a, long b) { return Vec2<Scalar>{Scalar(a), Scalar(b)}; };
  return {ParamSet<Scalar>::make(u, v, Scalar(1)), build_boundary(vec(1, 1), vec(1, 0), vec(1, 3), vec(1, 2))};
}

// "A..B", "A-B", a single "N", or a comma list.
inline std::vector<std::size_t> parse_sizes(const std::string& text) {
  auto number = [&](const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch); })) {
      throw ParseError("invalid size \"" + s + "\" in --sizes " + text);
    }
    return static_cast<std::size_t>(std::stoul(s));
  };
  std::vector<std::size_t> out;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    const std::size_t a = number(text.substr(0, dots)), b = number(text.substr(dots + 2));
    for (std::size_t k = a; k <= b; ++k) out.push_back(k);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(number(item));
  }
  return out;
}

inline std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    // "contraction" alone means contraction-expectation
    out.push_back(item == "contraction" ? "contraction-expectation" : item);
  }
  return out;
}

// Minimum over a few repetitions; repeats stop once 20 ms have been spent.
template <class F>
double time_min_ms(F&& f) {
  double best = 0, total = 0;
  for (int rep = 0; rep < 5; ++rep) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    best = rep == 0 ? ms : std::min(best, ms);
    total += ms;
    if (total >= 20) break;
  }
  return best;
}

inline int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err) {
  std::vector<std::size_t> sizes;
  try {
    sizes = parse_sizes(opt.sizes);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return config_error;
  }
  if (sizes.empty()) {
    err << "error: empty size list\n";
    return config_error;
  }
  const auto mode = parse_mode(opt.mode);
  if (!mode) {
    err << "error: mode must be exact or float\n";
    return config_error;
  }
  std::vector<Method> methods;
  for (const auto& name : split_list(opt.methods)) {
    const auto m = parse_method(name);
    if (!m || *m == Method::all) {
      err << "error: unknown bench method \"" << name << "\"\n";
      return config_error;
    }
    methods.push_back(*m);
  }
  if (methods.empty()) {
    err << "error: empty method list\n";
    return config_error;
  }
  for (std::size_t n : sizes) {
    for (Method m : methods) {
      if (auto why = inapplicable(m, n, n, *mode)) {
        err << "error: " << method_label(m) << " at n=" << n << ": " << *why << '\n';
        return config_error;
      }
    }
  }

  out << "n,m,method,mode,wall_ms,value_digest\n";
  for (std::size_t n : sizes) {
    const Instance in = bench_instance(n);
    for (Method m : methods) {
      Complex value;
      double ms = 0;
      try {
        if (*mode == Mode::exact) {
          const auto k = derive_constants(in.cfg);
          Scalar z;
          ms = time_min_ms([&] { z = evaluate(m, in.params, in.cfg, k); });
          value = z.to_complex();
        } else {
          const auto p = convert<Complex>(in.params);
          const auto cfg = convert<Complex>(in.cfg);
          const auto k = derive_constants(cfg);
          ms = time_min_ms([&] { value = evaluate(m, p, cfg, k); });
        }
      } catch (const Error& e) {
        err << "error: " << method_label(m) << " at n=" << n << ": " << e.what() << '\n';
        return config_error;
      }
      char ms_text[32];
      std::snprintf(ms_text, sizeof ms_text, "%.3f", ms);
      out << n << ',' << n << ',' << method_label(m) << ',' << mode_label(*mode) << ',' << ms_text << ','
          << value_digest(value) << '\n';
    }
  }
  return ok;
}

// ---------------------------------------------------------------------------
// Entry point

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Partition functions of the rational six-vertex model with rank-1 boundary twists"};
  app.require_subcommand(1);

  ComputeOptions compute;
  std::string method, mode, output;
  auto* c = app.add_subcommand("compute", "Compute Z for a JSON job configuration");
  c->add_option("config", compute.config_path, "Job configuration (JSON)")->required();
  c->add_option("--method", method, "contraction-trace, contraction-expectation, det-v, det-u, sum-v, sum-u, cramer, all");
  c->add_option("--mode", mode, "exact or float");
  c->add_option("-o,--output", output, "Write the result JSON here instead of stdout");

  VerifyOptions verify;
  auto* v = app.add_subcommand("verify", "Run a verification suite and stream JSON-line reports");
  v->add_option("--suite", verify.suite, "Suite name, or all")->required();
  v->add_option("--seed", verify.seed, "Random seed");
  v->add_option("--max-size", verify.max_size, "Largest lattice side (0 = suite default)");

  BenchOptions bench;
  auto* b = app.add_subcommand("bench", "Time methods over a size range, CSV to stdout");
  b->add_option("--sizes", bench.sizes, "A..B or a comma list")->required();
  b->add_option("--methods", bench.methods, "Comma-separated methods");
  b->add_option("--mode", bench.mode, "exact or float");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return config_error;
  }

  if (c->parsed()) {
    if (c->count("--method")) compute.method = method;
    if (c->count("--mode")) compute.mode = mode;
    if (c->count("--output")) compute.output = output;
    return cmd_compute(compute, out, err);
  }
  if (v->parsed()) return cmd_verify(verify, out, err);
  return cmd_bench(bench, out, err);
}

}  // namespace sixvertex::cli
