#pragma once

// Generalized lexicographic orders on infinite words and the unique
// non-increasing omega-Lyndon factorization of finite and eventually
// periodic words.

#include "olyndon/errors.hpp"
#include "olyndon/factorize.hpp"
#include "olyndon/literals.hpp"
#include "olyndon/lyndon.hpp"
#include "olyndon/oracle.hpp"
#include "olyndon/orders.hpp"
#include "olyndon/words.hpp"
