display_name = "gmc"
library_name = "gmc"
author = "gmc Developers"
author_email = "gmc-dev@lists.launchpad.net"
license = "MIT"
url = "http://launchpad.net/gmc"
description = """
Monoidal categories graded by partial commutative monoids: grade checking,
free-category normal forms and exhaustive law verification
"""
