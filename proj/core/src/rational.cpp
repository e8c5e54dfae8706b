#include "plradon/rational.hpp"

// Rat is header-only on top of gmpxx; this TU anchors the module.
