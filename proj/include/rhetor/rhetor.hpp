#ifndef RHETOR_RHETOR_HPP
#define RHETOR_RHETOR_HPP

#include "rhetor/strategy.hpp"
#include "rhetor/textseg.hpp"
#include "rhetor/finders.hpp"
#include "rhetor/profile.hpp"
#include "rhetor/classify.hpp"
#include "rhetor/gloss.hpp"
#include "rhetor/generate.hpp"
#include "rhetor/entropy.hpp"
#include "rhetor/summarize.hpp"
#include "rhetor/experiments.hpp"

#endif  // RHETOR_RHETOR_HPP
