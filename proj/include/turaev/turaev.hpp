#pragma once

// Umbrella header.

#include "turaev/algebra.hpp"
#include "turaev/builders.hpp"
#include "turaev/bundle.hpp"
#include "turaev/characters.hpp"
#include "turaev/cli.hpp"
#include "turaev/crossed.hpp"
#include "turaev/error.hpp"
#include "turaev/field.hpp"
#include "turaev/group.hpp"
#include "turaev/hochschild.hpp"
#include "turaev/io.hpp"
#include "turaev/matrix.hpp"
#include "turaev/report.hpp"
#include "turaev/subspace.hpp"
