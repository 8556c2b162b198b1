public class S074 extends Abstract20 {
    public void open() {
        try {
            if (counter > 6) {
                switch (event) {
                    case EV4:
                        send("msg6");
                        send("msg5");
                        break;
                    case EV5:
                        update();
                        send("msg1");
                        break;
                    case EV1:
                        send("msg7");
                        break;
                }
                new Abstract3();
                update();
            }
            new S039();
        } finally {
            switch (event) {
                case EV1:
                    try {
                        new S097();
                    } catch (IllegalStateException e) {
                        update();
                        new S051();
                        send("msg3");
                    } catch (TimeoutException e) {
                        send("msg3");
                        log("trace");
                        send("msg3");
                    } finally {
                        send("msg2");
                    }
                    send("msg4");
                    new S011();
                    break;
            }
            new S097();
            log("trace");
        }
        switch (event) {
            case EV2:
                new S048();
                new S048();
                break;
            case EV0:
                switch (event) {
                    case EV3:
                        new S058();
                        new S072();
                        break;
                }
                send("msg1");
                new S080();
                break;
            case EV4:
                switch (event) {
                    case EV3:
                        log("trace");
                        try {
                            new S073();
                            log("trace");
                            send("msg3");
                        } finally {
                            send("msg6");
                            log("trace");
                            new S072();
                        }
                        break;
                    case EV1:
                        send("msg3");
                        switch (event) {
                            case EV0:
                                new S004();
                                break;
                            case EV3:
                                log("trace");
                                break;
                        }
                        send("msg4");
                        break;
                    case EV5:
                        try {
                            new S031();
                            send("msg6");
                            send("msg1");
                        } catch (TimeoutException e) {
                            send("msg1");
                            send("msg5");
                            update();
                        } catch (IllegalStateException e) {
                            new S022();
                            new S067();
                            new S021();
                        }
                        send("msg7");
                        update();
                        break;
                }
                break;
        }
    }

    public void close() {
        try {
            log("trace");
            log("trace");
            new S035();
        } catch (IOException e) {
            switch (event) {
                case EV2:
                    log("trace");
                    new S026();
                    try {
                        new S052();
                        send("msg5");
                    } catch (IllegalStateException e) {
                        new S099();
                    } catch (IOException e) {
                        new S021();
                        new S024();
                        send("msg1");
                    }
                    break;
                case EV5:
                    switch (event) {
                        case EV2:
                            new S049();
                            send("msg7");
                            break;
                        case EV0:
                            log("trace");
                            send("msg7");
                            new S038();
                            break;
                    }
                    if (counter > 7) {
                        log("trace");
                        send("msg0");
                        send("msg4");
                    }
                    break;
                case EV4:
                    try {
                        send("msg1");
                        send("msg4");
                    } catch (IOException e) {
                        update();
                        send("msg2");
                        new S092();
                    } catch (TimeoutException e) {
                        send("msg4");
                        log("trace");
                        new S020();
                    } finally {
                        new S013();
                        new S010();
                    }
                    send("msg7");
                    break;
                default:
                    new S004();
                    break;
            }
            send("msg5");
            send("msg1");
        } catch (TimeoutException e) {
            switch (event) {
                case EV3:
                    new S036();
                    send("msg1");
                    send("msg7");
                    break;
                case EV2:
                    new Abstract24();
                    update();
                    try {
                        send("msg7");
                    } finally {
                        send("msg1");
                        send("msg2");
                    }
                    break;
            }
            update();
            switch (event) {
                case EV1:
                    send("msg0");
                    new S065();
                    new S044();
                    break;
                case EV2:
                    if (counter > 4) {
                        new S028();
                    }
                    new S032();
                    send("msg5");
                    break;
                case EV4:
                    switch (event) {
                        case EV2:
                            send("msg2");
                            break;
                        case EV5:
                            send("msg3");
                            send("msg5");
                            break;
                        case EV4:
                            new S092();
                            send("msg7");
                            new S048();
                            break;
                    }
                    break;
            }
        }
        new S022();
        if (counter > 0) {
            try {
                send("msg4");
                try {
                    send("msg6");
                    update();
                } catch (IllegalStateException e) {
                    send("msg4");
                    new Abstract19();
                    new S022();
                } catch (TimeoutException e) {
                    new S019();
                    new S029();
                    new S064();
                }
            } catch (TimeoutException e) {
                update();
            }
            if (counter > 1) {
                new S047();
                try {
                    log("trace");
                } catch (IllegalStateException e) {
                    new S091();
                    send("msg5");
                    send("msg4");
                } catch (TimeoutException e) {
                    send("msg6");
                }
            }
        } else {
            send("msg5");
            log("trace");
            try {
                update();
                send("msg6");
            } catch (IOException e) {
                send("msg4");
                send("msg3");
                send("msg4");
            } catch (TimeoutException e) {
                log("trace");
            } finally {
                log("trace");
                if (counter > 4) {
                    new S067();
                    new S086();
                    update();
                }
            }
        }
    }

    public void start() {
        new Abstract3();
        send("msg7");
        new S090();
    }

    public void stop() {
        send("msg7");
    }

    public void tick() {
        new S056();
        try {
            update();
        } catch (IllegalStateException e) {
            send("msg6");
            new S061();
            update();
        } catch (IOException e) {
            send("msg2");
            new S093();
            try {
                new Abstract1();
                send("msg2");
            } catch (IOException e) {
                send("msg1");
                try {
                    send("msg4");
                } catch (TimeoutException e) {
                    log("trace");
                    send("msg1");
                } catch (IllegalStateException e) {
                    log("trace");
                    new S080();
                } finally {
                    update();
                }
            }
        }
        try {
            send("msg2");
            new S058();
        } finally {
            switch (event) {
                case EV4:
                    new S072();
                    try {
                        send("msg3");
                        update();
                    } catch (TimeoutException e) {
                        send("msg3");
                        new S071();
                        new S087();
                    } catch (IOException e) {
                        new S078();
                    } finally {
                        send("msg0");
                        new S043();
                        update();
                    }
                    break;
                case EV0:
                    new S001();
                    try {
                        update();
                        send("msg0");
                    } catch (IOException e) {
                        send("msg6");
                    } catch (TimeoutException e) {
                        new S028();
                        send("msg2");
                    }
                    switch (event) {
                        case EV3:
                            new S099();
                            send("msg2");
                            break;
                        case EV4:
                            log("trace");
                            send("msg2");
                            update();
                            break;
                        case EV0:
                            update();
                            break;
                    }
                    break;
                case EV5:
                    update();
                    switch (event) {
                        case EV5:
                            new S000();
                            break;
                    }
                    break;
            }
            log("trace");
        }
    }

    public void reset() {
        if (counter > 6) {
            send("msg5");
        } else {
            new S023();
        }
        try {
            new S069();
            new S044();
        } finally {
            log("trace");
        }
    }

    public void pause() {
        switch (event) {
            case EV3:
                new S061();
                if (counter > 6) {
                    send("msg0");
                    if (counter > 5) {
                        send("msg0");
                    }
                    send("msg7");
                }
                new S049();
                break;
        }
        switch (event) {
            case EV5:
                try {
                    log("trace");
                    send("msg5");
                    try {
                        send("msg0");
                    } catch (IOException e) {
                        new S059();
                    } catch (TimeoutException e) {
                        send("msg0");
                    } finally {
                        new S054();
                        send("msg2");
                        update();
                    }
                } finally {
                    send("msg5");
                }
                switch (event) {
                    case EV3:
                        new S074();
                        try {
                            log("trace");
                        } catch (TimeoutException e) {
                            new S058();
                        }
                        break;
                    case EV1:
                        switch (event) {
                            case EV1:
                                new S033();
                                send("msg1");
                                break;
                        }
                        new S027();
                        break;
                    case EV5:
                        new S027();
                        send("msg5");
                        break;
                }
                send("msg2");
                break;
        }
        send("msg3");
    }

    public void resume() {
        if (counter > 8) {
            update();
            switch (event) {
                case EV5:
                    try {
                        new S005();
                    } catch (TimeoutException e) {
                        new S059();
                        new S085();
                    }
                    break;
                case EV1:
                    new S019();
                    new S078();
                    break;
                case EV4:
                    log("trace");
                    break;
            }
        }
        new S086();
        log("trace");
    }

    public void load() {
        try {
            if (counter > 0) {
                send("msg3");
                send("msg1");
            }
            try {
                if (counter > 7) {
                    send("msg4");
                    update();
                    new S093();
                } else {
                    send("msg7");
                    new S059();
                    send("msg1");
                }
            } catch (IllegalStateException e) {
                update();
            } catch (TimeoutException e) {
                send("msg1");
            }
        } catch (TimeoutException e) {
            switch (event) {
                case EV1:
                    send("msg6");
                    new S001();
                    new S088();
                    break;
            }
            if (counter > 7) {
                try {
                    send("msg3");
                    update();
                    new Abstract23();
                } catch (IOException e) {
                    send("msg0");
                    send("msg7");
                    send("msg3");
                } finally {
                    send("msg2");
                    send("msg7");
                }
            }
            try {
                switch (event) {
                    case EV0:
                        new S013();
                        log("trace");
                        break;
                    case EV3:
                        update();
                        break;
                }
            } finally {
                if (counter > 8) {
                    send("msg1");
                    new S077();
                }
                if (counter > 6) {
                    new S048();
                    new S033();
                    log("trace");
                } else {
                    log("trace");
                    send("msg4");
                }
                switch (event) {
                    case EV3:
                        send("msg7");
                        break;
                    case EV0:
                        send("msg7");
                        new S030();
                        break;
                    case EV4:
                        send("msg7");
                        send("msg6");
                        send("msg6");
                        break;
                }
            }
        } catch (IllegalStateException e) {
            try {
                update();
                log("trace");
            } catch (IOException e) {
                send("msg4");
                new S040();
            } catch (IllegalStateException e) {
                new S086();
                if (counter > 0) {
                    log("trace");
                } else {
                    send("msg1");
                    new S047();
                }
                send("msg3");
            } finally {
                new S045();
                update();
            }
            send("msg3");
        }
        send("msg1");
    }

    public void save() {
        new S087();
        switch (event) {
            case EV4:
                send("msg5");
                send("msg7");
                update();
                break;
            case EV1:
                new S022();
                break;
        }
        update();
    }
}
