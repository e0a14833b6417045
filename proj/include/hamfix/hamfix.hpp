#ifndef HAMFIX_HAMFIX_HPP
#define HAMFIX_HAMFIX_HPP

#include "hamfix/classify.hpp"
#include "hamfix/errors.hpp"
#include "hamfix/expr.hpp"
#include "hamfix/fixed_data.hpp"
#include "hamfix/json_io.hpp"
#include "hamfix/laurent.hpp"
#include "hamfix/localization.hpp"
#include "hamfix/models.hpp"
#include "hamfix/poly.hpp"
#include "hamfix/rational.hpp"
#include "hamfix/ring.hpp"
#include "hamfix/weights.hpp"

#endif
