#include "chf/case_id.hpp"

namespace chf {

char to_char(BColumn c) {
  switch (c) {
    case BColumn::A:
      return 'A';
    case BColumn::B:
      return 'B';
    case BColumn::C:
      return 'C';
  }
  return '?';
}

std::string CaseId::to_string() const { return std::to_string(row) + "." + to_char(col); }

std::optional<CaseId> CaseId::parse(std::string_view text) {
  if (text.size() != 3 || text[1] != '.') return std::nullopt;
  if (text[0] < '1' || text[0] > '6') return std::nullopt;
  CaseId id;
  id.row = text[0] - '0';
  switch (text[2]) {
    case 'A':
      id.col = BColumn::A;
      break;
    case 'B':
      id.col = BColumn::B;
      break;
    case 'C':
      id.col = BColumn::C;
      break;
    default:
      return std::nullopt;
  }
  return id;
}

bool CaseId::is_dno() const {
  switch (row) {
    case 2:
      return col != BColumn::A;
    case 3:
      return col == BColumn::C;
    case 4:
    case 6:
      return col == BColumn::A || (row == 6 && col == BColumn::B);
    default:
      return false;
  }
}

}  // namespace chf
