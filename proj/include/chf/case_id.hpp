#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace chf {

/// Column of the labyrinth: category of b.
enum class BColumn { A, B, C };  // b not integer, b in Z<=0, b in Z>0

/// One cell of the 6 x 3 labyrinth.
///
/// Rows: 1/2 a not an integer, 3/4 a in Z<=0, 5/6 a in Z>0; the even row of
/// each pair holds the pairs with 1 + a - b in Z<=0.
struct CaseId {
  int row = 1;
  BColumn col = BColumn::A;

  std::string to_string() const;  // e.g. "4.C"
  static std::optional<CaseId> parse(std::string_view text);

  bool is_dno() const;

  friend auto operator<=>(const CaseId&, const CaseId&) = default;
};

char to_char(BColumn c);

}  // namespace chf
