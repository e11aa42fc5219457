# -*- coding: utf-8; -*-

from lclbench.commands.gen import Gen
from lclbench.commands.solve import Solve
from lclbench.commands.check import Check
from lclbench.commands.bench import Bench
from lclbench.commands.fit import Fit
from lclbench.commands.predict import Predict
from lclbench.commands.version import Version
