#include "gtable/gallery.hpp"

#include <doctest.h>

using namespace gtable;
using namespace gtable::gallery;
using la::ratio;

TEST_CASE("sl(3) under SL2 matches its reference table") {
    auto r = sl3_report();
    for (const auto& m : r.mismatches) MESSAGE(m);
    CHECK(r.ok());
}

TEST_CASE("sl(3) under SL2: the cell of the two canonical summands") {
    auto t = sl3_report().computed;
    auto i = [&](const char* id) { return t.source_index(id); };
    CHECK(t.cell(i("V_1"), i("V_1'")) == GTable::Cell{{i("V_0"), 1, ratio(1, 2)}, {i("V_2"), 1, ratio(-1, 2)}});
}
