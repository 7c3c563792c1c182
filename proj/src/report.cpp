#include "mmalign/report.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "mmalign/engine.hpp"
#include "mmalign/formulas.hpp"
#include "mmalign/genfunc.hpp"

namespace mmalign {

std::string Cell::to_text() const {
  return std::visit(
      [this](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Count>) {
          return to_decimal(v);
        } else if constexpr (std::is_same_v<T, double>) {
          char buffer[64];
          if (decimals >= 0) {
            double shown = v;
            if (truncate) {
              const double scale = std::pow(10.0, decimals);
              shown = std::trunc(v * scale) / scale;
            }
            std::snprintf(buffer, sizeof buffer, "%.*f", decimals, shown);
          } else {
            std::snprintf(buffer, sizeof buffer, "%.12g", v);
          }
          return buffer;
        } else if constexpr (std::is_same_v<T, long long>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "pass" : "FAIL";
        } else {
          return v;
        }
      },
      value);
}

nlohmann::ordered_json Cell::to_json() const {
  return std::visit(
      [](const auto& v) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Count>) {
          // exact integers are always decimal strings
          return to_decimal(v);
        } else {
          return v;
        }
      },
      value);
}

std::string Report::to_text() const {
  std::ostringstream out;
  if (text_header) {
    out << '#';
    for (std::size_t i = text_skip; i < columns.size(); ++i) out << ' ' << columns[i].name;
    out << '\n';
  }
  for (const auto& row : rows) {
    for (std::size_t i = text_skip; i < row.size(); ++i) {
      if (i > text_skip) out << ' ';
      out << row[i].to_text();
    }
    out << '\n';
  }
  return out.str();
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json out;
  out["command"] = command;
  out["inputs"] = inputs;
  auto& cols = out["columns"] = nlohmann::ordered_json::array();
  for (const auto& c : columns) cols.push_back({{"name", c.name}, {"source", c.source}});
  auto& rows_json = out["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size() && i < columns.size(); ++i) r[columns[i].name] = row[i].to_json();
    rows_json.push_back(std::move(r));
  }
  return out;
}

Report table4_report(unsigned max) {
  Report report;
  report.command = "table4";
  report.inputs["max"] = max;
  report.text_header = true;
  const auto twelve = StepSet::box(1, 2, 3);
  const auto classical = StepSet::unit_cube(3);
  report.columns = {{"l", "input"}, {twelve.to_string(), "count table"}, {classical.to_string(), "count table"}};
  if (max == 0) return report;
  auto& cache = default_table_cache();
  const auto box = LengthTuple::diagonal(3, max);
  const auto a = cache.get(twelve, box);
  const auto b = cache.get(classical, box);
  for (unsigned l = 1; l <= max; ++l) {
    const auto point = LengthTuple::diagonal(3, l);
    report.rows.push_back({Cell::integer(l), Cell::exact(a->at(point)), Cell::exact(b->at(point))});
  }
  return report;
}

Report table5_report(unsigned max) {
  Report report;
  report.command = "table5";
  report.inputs["max"] = max;
  report.text_header = true;
  report.columns = {{"l", "input"},
                    {"exact", "count table"},
                    {"approx", "box12_asym"},
                    {"rel_error", "|exact - approx| / approx"}};
  if (max == 0) return report;
  const auto s = StepSet::box(1, 2, 3);
  const auto table = default_table_cache().get(s, LengthTuple::diagonal(3, max));
  for (unsigned l = 1; l <= max; ++l) {
    const Count& exact = table->at(LengthTuple::diagonal(3, l));
    const double approx = box12_asym(l, 3).value;
    const double error = std::abs(exact.get_d() - approx) / approx;
    report.rows.push_back({Cell::integer(l), Cell::exact(exact), Cell::truncated(approx, 2), Cell::truncated(error, 3)});
  }
  return report;
}

Report diagonal_report(const StepSet& s, unsigned max) {
  Report report;
  report.command = "diagonal";
  report.inputs["steps"] = s.to_string();
  report.inputs["max"] = max;
  report.columns = {{"l", "input"}, {"count", "count table"}};
  if (max == 0) return report;
  const auto n = s.dimension();
  const auto table = default_table_cache().get(s, LengthTuple::diagonal(n, max));
  for (unsigned l = 1; l <= max; ++l) {
    report.rows.push_back({Cell::integer(l), Cell::exact(table->at(LengthTuple::diagonal(n, l)))});
  }
  return report;
}

namespace {

// The three independent evaluations of one step set over one box.
struct Routes {
  std::shared_ptr<const CountTable> table;
  SeriesBox series;
  MultinomialTable multinomial;
};

Routes compute_routes(const StepSet& s, const LengthTuple& box) {
  return {default_table_cache().get(s, box), series_coefficients(s, box), MultinomialTable::compute(s, box)};
}

std::vector<LengthTuple> all_points(const LengthTuple& box) {
  std::vector<LengthTuple> out;
  const BoxIndex index(box);
  std::vector<unsigned> m(box.dimension(), 0);
  do {
    out.emplace_back(m);
  } while (index.next(m));
  return out;
}

}  // namespace

VerifyResult verify_catalog(unsigned max, std::size_t max_dimension) {
  VerifyResult result;
  auto& report = result.report;
  report.command = "verify";
  report.inputs["max"] = max;
  report.inputs["max_dimension"] = max_dimension;
  report.text_header = true;
  report.columns = {{"formula", "catalog"},
                    {"N", "input"},
                    {"tuples", "input"},
                    {"closed_form", "formula vs count table"},
                    {"generating_function", "series coefficient vs count table"},
                    {"multinomial", "multinomial sum vs count table"},
                    {"status", "all routes"}};

  std::map<std::string, Routes> routes;
  for (const auto& info : formula_catalog()) {
    if (!info.exact) continue;
    const std::size_t top = info.max_dimension == 0 ? max_dimension : std::min(info.max_dimension, max_dimension);
    for (std::size_t n = info.min_dimension; n <= top; ++n) {
      const auto s = formula_step_set(info.id, n);
      const auto box = LengthTuple::diagonal(n, max);
      const std::string key = s.to_string() + "@" + box.to_string();
      auto it = routes.find(key);
      if (it == routes.end()) it = routes.emplace(key, compute_routes(s, box)).first;
      const auto& r = it->second;

      std::vector<LengthTuple> points;
      if (info.diagonal_only) {
        for (unsigned l = 1; l <= max; ++l) points.push_back(LengthTuple::diagonal(n, l));
      } else {
        points = all_points(box);
      }
      bool closed_ok = true, series_ok = true, multinomial_ok = true;
      for (const auto& p : points) {
        const Count& expected = r.table->at(p);
        closed_ok = closed_ok && evaluate_exact(info.id, p) == expected;
        series_ok = series_ok && r.series.coeff(p) == expected;
        multinomial_ok = multinomial_ok && r.multinomial.total(p) == expected;
      }
      const bool ok = closed_ok && series_ok && multinomial_ok;
      result.passed = result.passed && ok;
      report.rows.push_back({Cell::text(std::string(info.name)), Cell::integer(static_cast<long long>(n)),
                             Cell::integer(static_cast<long long>(points.size())), Cell::flag(closed_ok),
                             Cell::flag(series_ok), Cell::flag(multinomial_ok), Cell::flag(ok)});
    }
  }
  return result;
}

VerifyResult verify_step_set(const StepSet& s, const LengthTuple& box) {
  VerifyResult result;
  auto& report = result.report;
  report.command = "verify";
  report.inputs["steps"] = s.to_string();
  report.inputs["box"] = box.to_string();
  report.text_header = true;
  report.columns = {{"route", "evaluator"}, {"cells", "input"}, {"mismatches", "vs count table"}, {"status", ""}};

  const auto r = compute_routes(s, box);
  long long series_bad = 0, multinomial_bad = 0;
  const auto points = all_points(box);
  for (const auto& p : points) {
    const Count& expected = r.table->at(p);
    series_bad += r.series.coeff(p) != expected;
    multinomial_bad += r.multinomial.total(p) != expected;
  }
  const auto cells = static_cast<long long>(points.size());
  report.rows.push_back({Cell::text("generating_function"), Cell::integer(cells), Cell::integer(series_bad),
                         Cell::flag(series_bad == 0)});
  report.rows.push_back({Cell::text("multinomial"), Cell::integer(cells), Cell::integer(multinomial_bad),
                         Cell::flag(multinomial_bad == 0)});
  result.passed = series_bad == 0 && multinomial_bad == 0;
  return result;
}

}  // namespace mmalign
