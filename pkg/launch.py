import cnorm.launcher

cnorm.launcher.launch()
