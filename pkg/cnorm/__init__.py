from cnorm.launcher import launch
