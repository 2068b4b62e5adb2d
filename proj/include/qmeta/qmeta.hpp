#pragma once

#include "qmeta/ast.hpp"
#include "qmeta/decoherence.hpp"
#include "qmeta/derivation.hpp"
#include "qmeta/error.hpp"
#include "qmeta/judgment.hpp"
#include "qmeta/meta_calculus.hpp"
#include "qmeta/parse.hpp"
#include "qmeta/print.hpp"
#include "qmeta/script.hpp"
#include "qmeta/semantics.hpp"
#include "qmeta/truth_engine.hpp"
