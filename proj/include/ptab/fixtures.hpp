#pragma once

#include "ptab/tableau.hpp"

namespace ptab {

/// The 13-step type A tableau with border SSWSWWSWWSSWS.
TableauA fig2();
/// The type B tableau on base border SWWSSWSWWWS with two diagonal 1s.
TableauB fig4();

}  // namespace ptab
