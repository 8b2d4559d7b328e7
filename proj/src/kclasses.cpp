#include "ncgdih/kclasses.hpp"

namespace ncgdih {

bool KClassRep::valid() const {
  auto check = [&](const auto& elt) {
    return kind == ClassKind::Projection ? is_projection(elt)
                                         : is_unitary(elt);
  };
  return algebra == AlgebraTag::B ? check(semidirect) : check(dihedral);
}

std::vector<KClassRep> standard_classes(AlgebraTag t) {
  std::vector<KClassRep> out;
  switch (t) {
    case AlgebraTag::A:
      out.push_back(
          {ClassKind::Projection, "[1]", t, proj_one(), SemidirectRing{}});
      out.push_back(
          {ClassKind::Projection, "[P1]", t, proj_p1(), SemidirectRing{}});
      out.push_back(
          {ClassKind::Projection, "[P2]", t, proj_p2(), SemidirectRing{}});
      break;
    case AlgebraTag::B:
      out.push_back({ClassKind::Projection, "[1]", t, DihedralRing{},
                     SemidirectRing::one()});
      out.push_back({ClassKind::Unitary, "[V]", t, DihedralRing{},
                     SemidirectRing(SemidirectPair::v())});
      out.push_back({ClassKind::Unitary, "[U]", t, DihedralRing{},
                     SemidirectRing(SemidirectPair::u())});
      break;
    case AlgebraTag::CT:
      out.push_back(
          {ClassKind::Projection, "[1]", t, proj_one(), SemidirectRing{}});
      out.push_back({ClassKind::Unitary, "[U]", t,
                     DihedralRing(DihedralWord::s()), SemidirectRing{}});
      break;
  }
  return out;
}

std::vector<std::vector<long long>> PairingTable::matrix() const {
  std::vector<std::vector<long long>> out;
  std::vector<long long> row;
  std::string current;
  for (const auto& c : cells) {
    if (c.module != current) {
      if (!row.empty()) out.push_back(row);
      row.clear();
      current = c.module;
    }
    row.push_back(c.result.value);
  }
  if (!row.empty()) out.push_back(row);
  return out;
}

PairingTable pairing_table(AlgebraTag t, int window_n, int n_max) {
  PairingTable table;
  table.algebra = t;
  table.window = window_n;
  table.n_max = n_max;
  auto classes = standard_classes(t);

  auto modules = [&]() -> std::vector<ModuleName> {
    switch (t) {
      case AlgebraTag::A:
        return {ModuleName::w0_A, ModuleName::w1_A, ModuleName::w2_A};
      case AlgebraTag::B:
        return {ModuleName::w0_B, ModuleName::w1_B};
      case AlgebraTag::CT:
        return {ModuleName::z0_CT, ModuleName::z1_CT};
    }
    return {};
  }();

  for (ModuleName name : modules) {
    FredholmModule m = catalog(name);
    for (const auto& cls : classes) {
      // even modules pair with projections, odd with unitaries
      bool even_cell =
          m.parity == Parity::Even && cls.kind == ClassKind::Projection;
      bool odd_cell =
          m.parity == Parity::Odd && cls.kind == ClassKind::Unitary;
      if (!even_cell && !odd_cell) continue;
      PairingResult r;
      if (t == AlgebraTag::B) {
        r = even_cell ? even_pairing(m, cls.semidirect, n_max, window_n)
                      : odd_pairing(m, cls.semidirect, window_n);
      } else {
        r = even_cell ? even_pairing(m, cls.dihedral, n_max, window_n)
                      : odd_pairing(m, cls.dihedral, window_n);
      }
      table.cells.push_back({to_string(name), cls.label, m.parity, r});
    }
  }
  return table;
}

}  // namespace ncgdih
