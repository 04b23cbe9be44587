#include "flowroots/planar.hpp"
