#pragma once

#include <zdl/error.hpp>
#include <zdl/formulas.hpp>
#include <zdl/graph.hpp>
#include <zdl/io.hpp>
#include <zdl/l21.hpp>
#include <zdl/ring.hpp>
#include <zdl/truncate.hpp>
#include <zdl/zdg.hpp>
