#include "steinhaus/residue.hpp"

// header-only; translation unit kept so the target always has this module
