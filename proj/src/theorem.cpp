#include "flowroots/theorem.hpp"
