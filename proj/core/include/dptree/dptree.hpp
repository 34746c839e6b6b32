#pragma once

#include "dptree/certificates.hpp"
#include "dptree/constructor.hpp"
#include "dptree/digraph.hpp"
#include "dptree/error.hpp"
#include "dptree/maxflow.hpp"
#include "dptree/oracle.hpp"
#include "dptree/pendant_tree.hpp"
#include "dptree/product.hpp"
#include "dptree/serialization.hpp"
