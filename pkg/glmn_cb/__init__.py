from glmn_cb.cb_laurent import *
from glmn_cb.cb_matrices import *
