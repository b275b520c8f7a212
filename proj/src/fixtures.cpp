#include "ptab/fixtures.hpp"

namespace ptab {

TableauA fig2()
{
    const auto d = Diagram::type_a(Shape::from_border("SSWSWWSWWSSWS"));
    return TableauA(bits_from_rows(d, {"001001", "000111", "00001", "011", "1", "1", ""}));
}

TableauB fig4()
{
    const auto d = Diagram::type_b(ShiftedShape(Shape::from_border("SWWSSWSWWWS")));
    return TableauB(bits_from_rows(
        d, {"0", "00", "101", "0000", "00011", "000000", "000001", "1011", "0001", "011", ""}));
}

}  // namespace ptab
