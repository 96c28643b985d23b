#ifndef CATKIT_IO_HPP_
#define CATKIT_IO_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "catkit/boolmat.hpp"
#include "catkit/linalg.hpp"
#include "catkit/monoid.hpp"
#include "catkit/verify.hpp"
#include "json.hpp"

namespace catkit {

  using Json = nlohmann::json;

  inline constexpr char const* version = CATKIT_VERSION;

  // {"n": 3, "rows": ["110", "111", "011"]}
  Json       to_json(BoolMatrix const& a);
  BoolMatrix bool_matrix_from_json(Json const& j);

  // Elements (canonical encodings), generators, shortest words and the full
  // product table.
  Json to_json(MonoidTable const& table, std::vector<std::string> const& generator_names);

  // Exact fractions as strings, e.g. ["1", "-1/2"].
  Json to_json(RationalVector const& v);

  Json to_json(CheckResult const& r);

  // Wraps a result with the library version, the command, its configuration
  // and the seed. Keys are sorted, so equal inputs give equal text.
  Json make_report(std::string const& command,
                   Json               config,
                   std::uint64_t      seed,
                   Json               result);

}  // namespace catkit

#endif  // CATKIT_IO_HPP_
