#pragma once

#include "hambypass/certificate.hpp"
#include "hambypass/conditions.hpp"
#include "hambypass/digraph.hpp"
#include "hambypass/errors.hpp"
#include "hambypass/families.hpp"
#include "hambypass/harness.hpp"
#include "hambypass/insertion.hpp"
#include "hambypass/io.hpp"
#include "hambypass/isomorphism.hpp"
#include "hambypass/search.hpp"
