#include "catkit/io.hpp"

#include <stdexcept>

namespace catkit {

  Json to_json(BoolMatrix const& a) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < a.degree(); ++i) {
      std::string row;
      for (std::size_t j = 0; j < a.degree(); ++j) {
        row += a.get(i, j) ? '1' : '0';
      }
      rows.push_back(row);
    }
    return {{"n", a.degree()}, {"rows", rows}};
  }

  BoolMatrix bool_matrix_from_json(Json const& j) {
    auto const n    = j.at("n").get<std::size_t>();
    auto const rows = j.at("rows").get<std::vector<std::string>>();
    if (rows.size() != n) {
      throw std::invalid_argument("matrix JSON: row count differs from n");
    }
    for (auto const& r : rows) {
      if (r.size() != n) {
        throw std::invalid_argument("matrix JSON: row length differs from n");
      }
    }
    return BoolMatrix::from_rows(rows);
  }

  Json to_json(MonoidTable const& table, std::vector<std::string> const& generator_names) {
    Json elements = Json::array();
    for (std::size_t x = 0; x < table.size(); ++x) {
      auto const idx  = static_cast<MonoidTable::index_type>(x);
      std::string word;
      for (auto g : table.word(idx)) {
        word += (word.empty() ? "" : " ") + generator_names.at(g);
      }
      elements.push_back({{"index", x},
                          {"encoding", table.encoding(idx)},
                          {"word", word},
                          {"idempotent", table.is_idempotent(idx)}});
    }
    return {{"size", table.size()},
            {"generators", generator_names},
            {"generator_indices", table.generators()},
            {"elements", elements},
            {"product", table.product_table()}};
  }

  Json to_json(RationalVector const& v) {
    Json out = Json::array();
    for (auto const& x : v) {
      out.push_back(x.get_str());
    }
    return out;
  }

  Json to_json(CheckResult const& r) {
    Json out = {{"key", r.key}, {"passed", r.passed}, {"summary", r.summary}};
    if (!r.counterexample.empty()) {
      out["counterexample"] = Json::parse(r.counterexample);
    }
    return out;
  }

  Json make_report(std::string const& command,
                   Json               config,
                   std::uint64_t      seed,
                   Json               result) {
    return {{"version", version},
            {"command", command},
            {"config", std::move(config)},
            {"seed", seed},
            {"result", std::move(result)}};
  }

}  // namespace catkit
