// Prints the character table of U(2, F_9) with degrees and indicators.

#include "ucm/ucm.hpp"

#include <iostream>

int main() {
  const ucm::TorusContext ctx(3, 2);
  const auto table = ucm::char_table(ctx, 2);
  const auto indicators = ucm::fs_bruteforce(ctx, table);
  std::cout << "field " << ucm::field_name(table.field_modulus) << "\n";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    std::cout << ucm::to_string(table.rows[r]) << "  degree " << ucm::degree(ctx, table.rows[r]) << "  indicator "
              << indicators[r] << "\n";
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      std::cout << "    " << ucm::to_string(table.columns[c].label) << ": " << ucm::to_string(table.values[r][c])
                << "\n";
    }
  }
  const auto census = ucm::census_semisimple(ucm::TorusContext(3, 4), 4);
  std::cout << "U(4, F_9): " << census.symplectic << " symplectic, " << census.orthogonal
            << " orthogonal semisimple characters\n";
}
