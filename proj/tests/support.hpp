#pragma once

#include "doctest.h"
#include "nichols/scalars.hpp"

namespace doctest {
template <>
struct StringMaker<nichols::CycScalar> {
    static String convert(const nichols::CycScalar& c) { return c.render().c_str(); }
};
} // namespace doctest
