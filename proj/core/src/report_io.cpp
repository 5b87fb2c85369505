#include "hookbound/report_io.hpp"

#include <stdexcept>

#include "json.hpp"

namespace hookbound {

using nlohmann::json;

namespace {

std::string num(const Rational& r) { return boost::multiprecision::numerator(r).str(); }
std::string den(const Rational& r) { return boost::multiprecision::denominator(r).str(); }

json rational_json(const Rational& r) { return {{"num", num(r)}, {"den", den(r)}}; }

// Partition and cycle-type texts contain commas.
std::string quoted(const std::string& text) { return "\"" + text + "\""; }

}  // namespace

OutputFormat parse_output_format(const std::string& text) {
  if (text == "csv") return OutputFormat::csv;
  if (text == "json") return OutputFormat::json;
  throw std::invalid_argument("unknown output format '" + text + "' (expected csv or json)");
}

void write_csv(std::ostream& out, const std::vector<BoundRecord>& records) {
  out << "n,lambda,alpha_or_mu,lhs_num,lhs_den,rhs_num,rhs_den,implied_c_num,implied_c_den,"
         "satisfied\n";
  for (const BoundRecord& r : records) {
    out << r.n << ',' << quoted(r.lambda) << ',' << quoted(r.alpha_or_mu) << ',' << num(r.lhs)
        << ',' << den(r.lhs) << ',' << num(r.rhs) << ',' << den(r.rhs) << ','
        << num(r.implied_c) << ',' << den(r.implied_c) << ',' << (r.satisfied ? "true" : "false")
        << '\n';
  }
}

void write_csv(std::ostream& out, const OrthogonalityReport& report) {
  out << "n,lambda,mu,inner_product\n";
  for (const auto& v : report.violations) {
    out << report.n << ',' << quoted(v.lambda.to_string()) << ',' << quoted(v.mu.to_string())
        << ',' << v.inner_product.str() << '\n';
  }
}

void write_csv(std::ostream& out, const std::vector<SharpnessReport>& reports) {
  out << "s_tilde,h,k,case,lambda,mu,ratio_num,ratio_den,lower_bound_num,lower_bound_den,"
         "scaled_ratio_num,scaled_ratio_den,satisfied\n";
  for (const SharpnessReport& r : reports) {
    out << r.s_tilde << ',' << r.h << ',' << r.k << ',' << static_cast<int>(r.which) << ','
        << quoted(r.lambda.to_string()) << ',' << quoted(r.mu.to_string()) << ','
        << num(r.ratio) << ',' << den(r.ratio) << ',' << num(r.lower_bound) << ','
        << den(r.lower_bound) << ',' << num(r.scaled_ratio) << ',' << den(r.scaled_ratio)
        << ',' << (r.satisfied ? "true" : "false") << '\n';
  }
}

void write_csv(std::ostream& out, const std::vector<CompressionStats>& stats) {
  out << "lambda,k,mu,contained,p_num,p_den,pl_num,pl_den,a_num,a_den,a_bound_num,"
         "a_bound_den,a_bound_holds\n";
  for (const CompressionStats& s : stats) {
    for (const CompressionRecord& r : s.records) {
      out << quoted(r.lambda.to_string()) << ',' << r.k << ',' << quoted(r.mu.to_string())
          << ',' << (r.contained ? "true" : "false") << ',' << num(r.p) << ',' << den(r.p)
          << ',' << num(r.pl) << ',' << den(r.pl) << ',' << num(r.a) << ',' << den(r.a) << ','
          << num(r.a_bound) << ',' << den(r.a_bound) << ','
          << (r.a_bound_holds ? "true" : "false") << '\n';
    }
  }
}

void write_json(std::ostream& out, const BoundSweep& sweep) {
  json records = json::array();
  for (const BoundRecord& r : sweep.records) {
    json rec = {{"n", r.n},
                {"lambda", r.lambda},
                {"alpha_or_mu", r.alpha_or_mu},
                {"lhs", rational_json(r.lhs)},
                {"rhs", rational_json(r.rhs)},
                {"implied_c", rational_json(r.implied_c)},
                {"power", r.power},
                {"squared", r.squared},
                {"satisfied", r.satisfied}};
    if (!r.note.empty()) rec["note"] = r.note;
    records.push_back(std::move(rec));
  }
  const SweepSummary& s = sweep.summary;
  json doc = {{"kind", "bound_sweep"},
              {"sweep", s.name},
              {"n", s.n},
              {"records", std::move(records)},
              {"summary",
               {{"records", s.records},
                {"violations", s.violations},
                {"edge_cases", s.edge_cases},
                {"edge_violations", s.edge_violations},
                {"max_implied_c", rational_json(s.max_implied_c)},
                {"argmax", s.argmax},
                {"hard", s.hard},
                {"passed", s.passed()}}}};
  out << doc.dump(2) << '\n';
}

void write_json(std::ostream& out, const OrthogonalityReport& report) {
  json records = json::array();
  for (const auto& v : report.violations) {
    records.push_back({{"lambda", v.lambda.to_string()},
                       {"mu", v.mu.to_string()},
                       {"inner_product", v.inner_product.str()}});
  }
  json doc = {{"kind", "orthogonality"},
              {"n", report.n},
              {"records", std::move(records)},
              {"summary",
               {{"pairs_checked", report.pairs_checked},
                {"violations", report.violations.size()},
                {"passed", report.passed()}}}};
  out << doc.dump(2) << '\n';
}

void write_json(std::ostream& out, int max_n, const std::vector<SharpnessReport>& reports) {
  json records = json::array();
  std::size_t failures = 0;
  for (const SharpnessReport& r : reports) {
    if (!r.satisfied) ++failures;
    records.push_back({{"s_tilde", r.s_tilde},
                       {"h", r.h},
                       {"k", r.k},
                       {"case", static_cast<int>(r.which)},
                       {"lambda", r.lambda.to_string()},
                       {"mu", r.mu.to_string()},
                       {"ratio", rational_json(r.ratio)},
                       {"lower_bound", rational_json(r.lower_bound)},
                       {"scaled_ratio", rational_json(r.scaled_ratio)},
                       {"satisfied", r.satisfied}});
  }
  json doc = {{"kind", "sharpness"},
              {"n", max_n},
              {"records", std::move(records)},
              {"summary",
               {{"instances", reports.size()},
                {"violations", failures},
                {"passed", failures == 0}}}};
  out << doc.dump(2) << '\n';
}

void write_json(std::ostream& out, int n, const std::vector<CompressionStats>& stats) {
  json records = json::array();
  std::size_t failures = 0;
  for (const CompressionStats& s : stats) {
    const CompressionSummary& sum = s.summary;
    if (!sum.passed()) ++failures;
    records.push_back({{"lambda", sum.lambda.to_string()},
                       {"k", sum.k},
                       {"total_p", rational_json(sum.total_p)},
                       {"total_pl", rational_json(sum.total_pl)},
                       {"tv_distance", rational_json(sum.tv_distance)},
                       {"max_abs_a_minus_1", rational_json(sum.max_abs_a_minus_1)},
                       {"bound_violations", sum.bound_violations},
                       {"passed", sum.passed()}});
  }
  json doc = {{"kind", "compression"},
              {"n", n},
              {"records", std::move(records)},
              {"summary",
               {{"instances", stats.size()},
                {"violations", failures},
                {"passed", failures == 0}}}};
  out << doc.dump(2) << '\n';
}

}  // namespace hookbound
