#pragma once

#include "spanlab/error.hpp"
#include "spanlab/families.hpp"
#include "spanlab/graph.hpp"
#include "spanlab/io.hpp"
#include "spanlab/product.hpp"
#include "spanlab/span.hpp"
#include "spanlab/verify.hpp"
