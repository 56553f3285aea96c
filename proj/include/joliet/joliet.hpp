#pragma once

// Umbrella header for the language core and the documentation engine.
// The HTTP transport lives in joliet/service/http.hpp.

#include "joliet/doc/docdb.hpp"
#include "joliet/doc/hover.hpp"
#include "joliet/doc/markdown.hpp"
#include "joliet/interp.hpp"
#include "joliet/scalar.hpp"
#include "joliet/service/handlers.hpp"
#include "joliet/syntax/ast.hpp"
#include "joliet/syntax/lexer.hpp"
#include "joliet/syntax/parser.hpp"
#include "joliet/syntax/printer.hpp"
#include "joliet/transform.hpp"
#include "joliet/valuetree.hpp"
