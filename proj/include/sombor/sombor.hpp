#ifndef SOMBOR_SOMBOR_HPP
#define SOMBOR_SOMBOR_HPP

#include "sombor/canonical.hpp"
#include "sombor/edge_list.hpp"
#include "sombor/enumeration.hpp"
#include "sombor/errors.hpp"
#include "sombor/extremal.hpp"
#include "sombor/invariants.hpp"
#include "sombor/transforms.hpp"
#include "sombor/tree.hpp"
#include "sombor/verify.hpp"

#endif  // SOMBOR_SOMBOR_HPP
