#pragma once

#include "ncc/ambient.hpp"
#include "ncc/analyzer.hpp"
#include "ncc/corpus.hpp"
#include "ncc/deadline.hpp"
#include "ncc/deletion.hpp"
#include "ncc/diagnostic_codes.hpp"
#include "ncc/edits.hpp"
#include "ncc/fixes.hpp"
#include "ncc/lexer.hpp"
#include "ncc/parser.hpp"
#include "ncc/pipeline.hpp"
#include "ncc/serialize.hpp"
#include "ncc/source.hpp"
#include "ncc/syntax_tree.hpp"
