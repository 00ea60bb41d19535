# CCIC Gap Toolkit - Engine
