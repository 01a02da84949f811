#pragma once

#include "e5proof/bracelets.hpp"
#include "e5proof/cosetenum.hpp"
#include "e5proof/engel.hpp"
#include "e5proof/proofword.hpp"
#include "e5proof/search.hpp"
#include "e5proof/word.hpp"
