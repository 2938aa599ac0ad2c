from automata.models.run import SpacetimeRun
from automata.models.classification import Classification, RuleClass
from automata.models.verification import Verification
