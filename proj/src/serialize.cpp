#include "whittaker/serialize.hpp"

namespace whittaker::serialize {

nlohmann::json gram_to_json(const GramMatrix& g, int decimal_digits) {
  nlohmann::json out;
  out["basis_labels"] = g.labels;
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < g.entries.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < g.entries.cols(); ++j) row.push_back(rat_to_string(g.entries(i, j)));
    rows.push_back(std::move(row));
  }
  out["entries"] = std::move(rows);
  if (decimal_digits >= 0) {
    nlohmann::json rows_d = nlohmann::json::array();
    for (Eigen::Index i = 0; i < g.entries.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (Eigen::Index j = 0; j < g.entries.cols(); ++j)
        row.push_back(rat_to_decimal(g.entries(i, j), decimal_digits));
      rows_d.push_back(std::move(row));
    }
    out["entries_decimal"] = std::move(rows_d);
    out["entries_decimal_note"] = "rounded presentation only; entries holds the exact values";
  }
  return out;
}

std::string gram_to_csv(const GramMatrix& g) {
  std::string out = "basis";
  for (const auto& l : g.labels) out += "," + l;
  out += "\n";
  for (Eigen::Index i = 0; i < g.entries.rows(); ++i) {
    out += g.labels[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < g.entries.cols(); ++j) out += "," + rat_to_string(g.entries(i, j));
    out += "\n";
  }
  return out;
}

nlohmann::json dims_to_json(const std::map<int, int>& dims_by_degree) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [d, v] : dims_by_degree) out[std::to_string(d)] = v;
  return out;
}

std::string dims_to_csv(const std::map<int, int>& dims_by_degree) {
  std::string out = "degree,dimension\n";
  for (const auto& [d, v] : dims_by_degree)
    out += std::to_string(d) + "," + std::to_string(v) + "\n";
  return out;
}

nlohmann::json checks_to_json(const std::vector<checks::CheckResult>& results) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : results) {
    nlohmann::json item;
    item["property"] = r.name;
    item["pass"] = r.pass;
    if (!r.detail.empty()) item["detail"] = r.detail;
    arr.push_back(std::move(item));
  }
  return arr;
}

}  // namespace whittaker::serialize
