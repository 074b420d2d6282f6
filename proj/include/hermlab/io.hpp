#ifndef HERMLAB_IO_HPP
#define HERMLAB_IO_HPP

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "hermlab/curvature.hpp"
#include "hermlab/optimize.hpp"
#include "hermlab/verify.hpp"

namespace hermlab {

// 17 significant digits: round-trip exact and byte-stable across runs
inline std::string format_double(double v) {
  if (v == 0.0) return "0";  // folds -0 into 0
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Minimal deterministic JSON emitter; keys are written in call order.
class JsonWriter {
public:
  JsonWriter& begin_object() {
    comma_();
    out_ << '{';
    stack_.push_back(false);
    return *this;
  }
  JsonWriter& end_object() {
    out_ << '}';
    stack_.pop_back();
    mark_();
    return *this;
  }
  JsonWriter& begin_array() {
    comma_();
    out_ << '[';
    stack_.push_back(false);
    return *this;
  }
  JsonWriter& end_array() {
    out_ << ']';
    stack_.pop_back();
    mark_();
    return *this;
  }
  JsonWriter& key(const std::string& k) {
    comma_();
    out_ << '"' << k << "\":";
    pending_value_ = true;
    return *this;
  }
  JsonWriter& value(double v) {
    comma_();
    out_ << format_double(v);
    mark_();
    return *this;
  }
  JsonWriter& value(int v) {
    comma_();
    out_ << v;
    mark_();
    return *this;
  }
  JsonWriter& value(long v) {
    comma_();
    out_ << v;
    mark_();
    return *this;
  }
  JsonWriter& value(bool v) {
    comma_();
    out_ << (v ? "true" : "false");
    mark_();
    return *this;
  }
  JsonWriter& value(const std::string& v) {
    comma_();
    out_ << '"';
    for (char ch : v) {
      if (ch == '"' || ch == '\\') out_ << '\\';
      out_ << ch;
    }
    out_ << '"';
    mark_();
    return *this;
  }
  JsonWriter& value(const char* v) { return value(std::string(v)); }
  JsonWriter& null() {
    comma_();
    out_ << "null";
    mark_();
    return *this;
  }

  std::string str() const { return out_.str() + "\n"; }

private:
  void comma_() {
    if (pending_value_) {
      pending_value_ = false;
      return;
    }
    if (!stack_.empty() && stack_.back()) out_ << ',';
  }
  void mark_() {
    if (!stack_.empty()) stack_.back() = true;
  }

  std::ostringstream out_;
  std::vector<bool> stack_;
  bool pending_value_ = false;
};

// --- curvature report --------------------------------------------------------

inline std::string report_to_json(const SpaceParams& sp, const MetricParams& m,
                                  const CurvatureReport& r) {
  JsonWriter w;
  w.begin_object();
  w.key("command").value("report");
  w.key("n").value(sp.n());
  w.key("p").value(sp.p());
  w.key("a").value(m.a());
  w.key("c").value(m.c());
  w.key("ricci").begin_array();
  for (int i = 0; i < r.ricci.sym.rows(); ++i) {
    w.begin_array();
    for (int j = 0; j < r.ricci.sym.cols(); ++j) w.value(r.ricci.sym(i, j));
    w.end_array();
  }
  w.end_array();
  w.key("scalar_trace").value(r.scalar_trace);
  w.key("scalar_closed_form").value(r.scalar_closed_form);
  w.key("ricci_eigen_coordinate").begin_array();
  for (double v : r.ricci_eigen_coordinate) w.value(v);
  w.end_array();
  w.key("ricci_operator_spectrum").begin_array();
  for (double v : r.ricci_operator_spectrum) w.value(v);
  w.end_array();
  w.key("einstein_constant");
  if (r.einstein_constant)
    w.value(*r.einstein_constant);
  else
    w.null();
  w.end_object();
  return w.str();
}

inline std::string report_to_csv(const SpaceParams& sp, const MetricParams& m,
                                 const CurvatureReport& r) {
  std::ostringstream out;
  out << "key,value\n";
  out << "n," << sp.n() << "\np," << sp.p() << "\na," << format_double(m.a()) << "\nc,"
      << format_double(m.c()) << "\n";
  out << "scalar_trace," << format_double(r.scalar_trace) << "\n";
  out << "scalar_closed_form," << format_double(r.scalar_closed_form) << "\n";
  for (size_t k = 0; k < r.ricci_eigen_coordinate.size(); ++k)
    out << "ricci_eigen_coordinate[" << k << "]," << format_double(r.ricci_eigen_coordinate[k]) << "\n";
  for (size_t k = 0; k < r.ricci_operator_spectrum.size(); ++k)
    out << "ricci_operator_spectrum[" << k << "],"
        << format_double(r.ricci_operator_spectrum[k]) << "\n";
  out << "einstein_constant,"
      << (r.einstein_constant ? format_double(*r.einstein_constant) : "") << "\n";
  for (int i = 0; i < r.ricci.sym.rows(); ++i)
    for (int j = 0; j < r.ricci.sym.cols(); ++j)
      out << "ricci[" << i << "][" << j << "]," << format_double(r.ricci.sym(i, j)) << "\n";
  return out.str();
}

// --- critical point ----------------------------------------------------------

inline std::string critical_point_to_json(int n, int p, CriticalPointMethod method,
                                          const CriticalPointResult& r) {
  JsonWriter w;
  w.begin_object();
  w.key("command").value("optimize");
  w.key("n").value(n);
  w.key("p").value(p);
  w.key("method").value(to_string(method));
  w.key("exists").value(r.exists);
  if (r.exists) {
    w.key("a_star").value(r.a_star);
    w.key("c_star").value(r.c_star);
    w.key("s_star").value(r.s_star);
  } else {
    w.key("a_star").null();
    w.key("c_star").null();
    w.key("s_star").null();
  }
  w.key("kind").value(to_string(r.kind));
  w.key("gradient_norm_at_star").value(r.gradient_norm_at_star);
  w.key("iterations").value(r.iterations);
  w.end_object();
  return w.str();
}

inline std::string critical_point_to_csv(int n, int p, CriticalPointMethod method,
                                         const CriticalPointResult& r) {
  std::ostringstream out;
  out << "key,value\n";
  out << "n," << n << "\np," << p << "\nmethod," << to_string(method) << "\n";
  out << "exists," << (r.exists ? "true" : "false") << "\n";
  out << "a_star," << (r.exists ? format_double(r.a_star) : "") << "\n";
  out << "c_star," << (r.exists ? format_double(r.c_star) : "") << "\n";
  out << "s_star," << (r.exists ? format_double(r.s_star) : "") << "\n";
  out << "kind," << to_string(r.kind) << "\n";
  out << "gradient_norm_at_star," << format_double(r.gradient_norm_at_star) << "\n";
  out << "iterations," << r.iterations << "\n";
  return out.str();
}

// --- sectional survey --------------------------------------------------------

inline std::string sectional_to_json(const SpaceParams& sp, int samples, std::uint64_t seed,
                                     const SectionalReport& r) {
  JsonWriter w;
  w.begin_object();
  w.key("command").value("sectional");
  w.key("n").value(sp.n());
  w.key("p").value(sp.p());
  w.key("samples").value(samples);
  w.key("seed").value(static_cast<long>(seed));
  w.key("regime").value(r.regime);
  w.key("bound_low").value(r.bound_low);
  w.key("bound_high").value(r.bound_high);
  w.key("observed_min").value(r.observed_min);
  w.key("observed_max").value(r.observed_max);
  w.key("argmin_bivector").value(r.argmin_bivector);
  w.key("argmax_bivector").value(r.argmax_bivector);
  w.key("samples_in_bounds").value(r.samples_in_bounds);
  w.end_object();
  return w.str();
}

inline std::string sectional_to_csv(const SpaceParams& sp, int samples, std::uint64_t seed,
                                    const SectionalReport& r) {
  std::ostringstream out;
  out << "key,value\n";
  out << "n," << sp.n() << "\np," << sp.p() << "\nsamples," << samples << "\nseed," << seed
      << "\n";
  out << "regime," << r.regime << "\n";
  out << "bound_low," << format_double(r.bound_low) << "\n";
  out << "bound_high," << format_double(r.bound_high) << "\n";
  out << "observed_min," << format_double(r.observed_min) << "\n";
  out << "observed_max," << format_double(r.observed_max) << "\n";
  out << "argmin_bivector," << r.argmin_bivector << "\n";
  out << "argmax_bivector," << r.argmax_bivector << "\n";
  out << "samples_in_bounds," << format_double(r.samples_in_bounds) << "\n";
  return out.str();
}

// --- verification ------------------------------------------------------------

inline std::string verify_to_json(const std::vector<SpaceParams>& grid,
                                  const VerifyOptions& opt,
                                  const std::vector<CheckResult>& checks) {
  bool all = true;
  for (const CheckResult& c : checks) all = all && c.pass;
  JsonWriter w;
  w.begin_object();
  w.key("command").value("verify");
  w.key("grid").begin_array();
  for (const SpaceParams& sp : grid) {
    w.begin_array();
    w.value(sp.n());
    w.value(sp.p());
    w.end_array();
  }
  w.end_array();
  w.key("seed").value(static_cast<long>(opt.seed));
  w.key("tolerance").value(opt.tolerance);
  w.key("checks").begin_array();
  for (const CheckResult& c : checks) {
    w.begin_object();
    w.key("name").value(c.name);
    w.key("pass").value(c.pass);
    w.key("worst_residual").value(c.worst_residual);
    w.key("tolerance").value(c.tolerance);
    w.end_object();
  }
  w.end_array();
  w.key("all_pass").value(all);
  w.end_object();
  return w.str();
}

inline std::string verify_to_csv(const std::vector<CheckResult>& checks) {
  std::ostringstream out;
  out << "check,pass,worst_residual,tolerance\n";
  for (const CheckResult& c : checks)
    out << c.name << "," << (c.pass ? "true" : "false") << ","
        << format_double(c.worst_residual) << "," << format_double(c.tolerance) << "\n";
  return out.str();
}

// --- scalar-curvature scan ---------------------------------------------------

struct ScanRow {
  double a;
  double c;
  double s;
};

inline std::string scan_to_csv(const std::vector<ScanRow>& rows) {
  std::ostringstream out;
  out << "a,c,s\n";
  for (const ScanRow& r : rows)
    out << format_double(r.a) << "," << format_double(r.c) << "," << format_double(r.s)
        << "\n";
  return out.str();
}

inline std::string scan_to_json(int n, int p, const std::vector<ScanRow>& rows) {
  JsonWriter w;
  w.begin_object();
  w.key("command").value("scan");
  w.key("n").value(n);
  w.key("p").value(p);
  w.key("columns").begin_array().value("a").value("c").value("s").end_array();
  w.key("rows").begin_array();
  for (const ScanRow& r : rows) {
    w.begin_array();
    w.value(r.a);
    w.value(r.c);
    w.value(r.s);
    w.end_array();
  }
  w.end_array();
  w.end_object();
  return w.str();
}

}  // namespace hermlab

#endif
