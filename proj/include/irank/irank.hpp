#pragma once

#include "irank/errors.hpp"
#include "irank/interval.hpp"
#include "irank/matrix.hpp"
#include "irank/matrix_file.hpp"
#include "irank/max_rank.hpp"
#include "irank/min_rank3.hpp"
#include "irank/oracle.hpp"
#include "irank/preprocess.hpp"
#include "irank/rank_one.hpp"
#include "irank/rational.hpp"
