#pragma once

// Umbrella header.

#include "teg/components.hpp"
#include "teg/consistency.hpp"
#include "teg/distribution.hpp"
#include "teg/edge_labelled.hpp"
#include "teg/ensemble.hpp"
#include "teg/event.hpp"
#include "teg/event_graph.hpp"
#include "teg/generators.hpp"
#include "teg/io.hpp"
#include "teg/motif.hpp"
#include "teg/parallel.hpp"
#include "teg/reconstruct.hpp"
#include "teg/svg.hpp"
