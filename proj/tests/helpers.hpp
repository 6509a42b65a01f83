#pragma once

#include <initializer_list>
#include <vector>

#include "lamps/bitset.hpp"

inline lamps::Bitset make_set(int size, std::initializer_list<int> ids) {
    lamps::Bitset s(size);
    for (int i : ids) s.set(i);
    return s;
}

inline std::vector<int> ids_of(const lamps::Bitset& s) { return s.ids(); }
