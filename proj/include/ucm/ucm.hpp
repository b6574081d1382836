#pragma once

#include "ucm/exact.hpp"
#include "ucm/cyclotomic.hpp"
#include "ucm/tori.hpp"
#include "ucm/partitions.hpp"
#include "ucm/multipartition.hpp"
#include "ucm/classes.hpp"
#include "ucm/symfunc.hpp"
#include "ucm/chartable.hpp"
#include "ucm/characters.hpp"
#include "ucm/finite_field.hpp"
#include "ucm/selfdual.hpp"
