#ifndef NCGDIH_RING_IO_HPP
#define NCGDIH_RING_IO_HPP

#include <string>

#include "ncgdih/group_ring.hpp"

namespace ncgdih {

struct TagMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// JSON form of a group-ring element:
///   {"group":"dihedral"|"semidirect",
///    "terms":[{"elem":[m,eps]|[m,n],"re":"p/q","im":"p/q"}]}
std::string to_json(const DihedralRing& a);
std::string to_json(const SemidirectRing& a);

/// Parsers reject a mismatched "group" tag with TagMismatch.
DihedralRing dihedral_ring_from_json(const std::string& text);
SemidirectRing semidirect_ring_from_json(const std::string& text);

}  // namespace ncgdih

#endif  // NCGDIH_RING_IO_HPP
