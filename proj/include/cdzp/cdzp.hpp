#pragma once

/**
 * @file cdzp.hpp
 * @brief Umbrella header for the whole library.
 */

#include "cdzp/algebra.hpp"
#include "cdzp/cipher.hpp"
#include "cdzp/errors.hpp"
#include "cdzp/fibring.hpp"
#include "cdzp/io.hpp"
#include "cdzp/modp.hpp"
#include "cdzp/potency.hpp"
