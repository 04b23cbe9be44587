#include "flowroots/matroid.hpp"
