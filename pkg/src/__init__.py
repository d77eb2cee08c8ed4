# TwistCDC - Source package
