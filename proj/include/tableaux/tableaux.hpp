#pragma once

#include "tableaux/bender_knuth.hpp"
#include "tableaux/correspondences.hpp"
#include "tableaux/enumerate.hpp"
#include "tableaux/error.hpp"
#include "tableaux/insertion.hpp"
#include "tableaux/knuth.hpp"
#include "tableaux/laurent.hpp"
#include "tableaux/letter.hpp"
#include "tableaux/oscillating.hpp"
#include "tableaux/partition.hpp"
#include "tableaux/symfunc.hpp"
#include "tableaux/tableau.hpp"
#include "tableaux/two_line_array.hpp"
#include "tableaux/word.hpp"
