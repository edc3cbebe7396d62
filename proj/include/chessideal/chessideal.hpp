#pragma once

#include "chessideal/vertex_set.hpp"
#include "chessideal/transversal.hpp"
#include "chessideal/ring.hpp"
#include "chessideal/simplicial.hpp"
#include "chessideal/chessboard.hpp"
#include "chessideal/homology.hpp"
#include "chessideal/parallel.hpp"
#include "chessideal/invariants.hpp"
#include "chessideal/io.hpp"
#include "chessideal/verify.hpp"
