#pragma once

#include <iosfwd>
#include <string>

#include "schur0/structure_table.hpp"

namespace schur0 {

/// {name, n, r, product, basis, entries:[[i,j,k,"p/q"],...]}. Entries are sorted
/// by (i,j,k) and the text is byte-identical for equal tables.
std::string table_to_json(const StructureTable& t, int indent = -1);
void write_table(std::ostream& out, const StructureTable& t);

/// Inverse of table_to_json. Throws std::invalid_argument on malformed input.
StructureTable table_from_json(const std::string& text);

}  // namespace schur0
