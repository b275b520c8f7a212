#pragma once

#include <vector>

#include "oracles.hpp"
#include "ptab/fixtures.hpp"
#include "ptab/io.hpp"
#include "ptab/maps.hpp"
#include "ptab/tableau.hpp"

namespace support {

inline ptab::CellMap cell_map(const oracle::Grid& g)
{
    ptab::CellMap m;
    for (const auto& [cell, v] : g.value) m[cell] = v;
    return m;
}

inline oracle::Grid grid_of(const ptab::Bits& bits)
{
    const auto& d = bits.diagram();
    oracle::Grid g = oracle::grid(d.base().border_string(), d.kind() == ptab::Kind::B);
    for (auto& [cell, v] : g.value) v = bits.at(cell.first, cell.second);
    return g;
}

inline ptab::TableauA tableau_a(const oracle::Grid& g)
{
    return ptab::validate_a(ptab::Shape::from_border(g.border), cell_map(g));
}

inline ptab::TableauB tableau_b(const oracle::Grid& g)
{
    return ptab::validate_b(ptab::ShiftedShape(ptab::Shape::from_border(g.border)), cell_map(g));
}

/// PT(n) and PTB(n) from the oracle's brute-force filter.
inline std::vector<ptab::TableauA> oracle_pt(int n)
{
    std::vector<ptab::TableauA> out;
    for (const auto& g : oracle::all_tableaux(n, false)) out.push_back(tableau_a(g));
    return out;
}

inline std::vector<ptab::TableauB> oracle_ptb(int n)
{
    std::vector<ptab::TableauB> out;
    for (const auto& g : oracle::all_tableaux(n, true)) out.push_back(tableau_b(g));
    return out;
}

inline std::vector<int> vec(std::span<const int> s) { return {s.begin(), s.end()}; }

}  // namespace support
